#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::bwt::clustering_certificates;
use bwclust::criterion::clustering_by_criterion;
use bwclust::words::{Alphabet, Perm, Word};

// The bispecial order condition must agree with direct transform detection
// on every input, order and permutation.
fuzz_target!(|data: &[u8]| {
    if data.is_empty() || data.len() > 10 {
        return;
    }
    let word = Word::new(data.iter().map(|b| (b'a' + b % 3) as char));
    if !word.is_primitive().unwrap() {
        return;
    }
    let letters = Alphabet::lowercase(3).unwrap();
    for order in letters.all_orders().unwrap() {
        let certs = clustering_certificates(&word, &order).unwrap();
        for image in ["acb", "bac", "bca", "cab", "cba"] {
            let pi = Perm::parse(image, &letters).unwrap();
            let direct = certs.iter().any(|c| c.permutation == pi);
            let report = clustering_by_criterion(&word, &order, &pi).unwrap();
            assert_eq!(direct, report.verdict, "{word} {order} {image}");
            assert_eq!(report.verdict, report.violations.is_empty());
        }
    }
});
