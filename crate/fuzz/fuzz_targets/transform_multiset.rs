#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::bwt::{bwt, clustering_certificates};
use bwclust::words::{Alphabet, Word};

// Arbitrary bytes map to short words over a..d; the transform must permute
// the letter multiset and every certificate must carry the right run counts.
fuzz_target!(|data: &[u8]| {
    if data.is_empty() || data.len() > 32 {
        return;
    }
    let word = Word::new(data.iter().map(|b| (b'a' + b % 4) as char));
    let order = Alphabet::lowercase(4).unwrap();
    let transform = bwt(&word, &order).unwrap();
    let mut x = transform.letters().to_vec();
    let mut y = word.letters().to_vec();
    x.sort_unstable();
    y.sort_unstable();
    assert_eq!(x, y);
    for cert in clustering_certificates(&word, &order).unwrap() {
        assert!(!cert.permutation.is_identity());
        assert_eq!(cert.transform, transform);
        for (letter, count) in cert.runs {
            assert_eq!(word.count(letter), count);
        }
    }
});
