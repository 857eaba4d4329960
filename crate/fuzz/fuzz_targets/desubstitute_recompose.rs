#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::morphism::{apply_chain, desubstitute};
use bwclust::words::Word;

fuzz_target!(|data: &[u8]| {
    if data.is_empty() || data.len() > 24 {
        return;
    }
    let word = Word::new(data.iter().map(|b| (b'a' + b % 3) as char));
    if let Some(d) = desubstitute(&word, &['a', 'b', 'c']).unwrap() {
        assert_eq!(apply_chain(&d.chain, &Word::new([d.letter])), word);
    }
});
