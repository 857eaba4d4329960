#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::words::Word;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(word) = s.parse::<Word>() {
            // parsed words reprint to their input
            assert_eq!(word.is_empty(), s.is_empty());
            if !word.is_empty() {
                assert_eq!(word.to_string(), s);
                let (root, m) = word.primitive_root().unwrap();
                assert_eq!(root.repeat(m), word);
                assert_eq!(word.conjugates().unwrap().len(), word.len());
            }
        }
    }
});
