#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::words::Alphabet;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(order) = s.parse::<Alphabet>() {
            assert_eq!(order.to_string(), s);
            for (i, &c) in order.letters().iter().enumerate() {
                assert_eq!(order.rank(c).unwrap(), i);
            }
            let sym = order.symmetric_permutation();
            assert!(sym.compose(&sym).unwrap().is_identity());
        }
    }
});
