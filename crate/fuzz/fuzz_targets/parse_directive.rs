#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::ar::{evolve, Directive};
use bwclust::epi;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if s.len() > 24 {
        return;
    }
    let Ok(d) = s.parse::<Directive>() else { return };
    assert_eq!(d.to_string(), s);
    if d.alphabet.len() <= 4 && d.is_epi_valid() {
        let state = evolve(&d, 6).unwrap();
        // the bispecial grows by one standard word per stage
        assert!(state.bispecial.len() >= 6);
        if d.alphabet.len() == 3 {
            let _ = epi::clustering_supply(&d).unwrap();
            if d.is_ar_valid() {
                let bound = bwclust::ar::non_clustering_bound(&d).unwrap();
                let long = bwclust::ar::long_clustering_word(&d).unwrap();
                assert!(long.len() < bound);
            }
        }
    }
});
