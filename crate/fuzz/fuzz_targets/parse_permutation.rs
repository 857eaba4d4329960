#![no_main]

use libfuzzer_sys::fuzz_target;

use bwclust::words::{Alphabet, Perm};

// First line: the alphabet; second line: the image string.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((order, image)) = s.split_once('\n') else { return };
    let Ok(alphabet) = order.parse::<Alphabet>() else { return };
    if let Ok(pi) = Perm::parse(image, &alphabet) {
        let inv = pi.inverse();
        assert!(pi.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&pi).unwrap().is_identity());
        assert_eq!(Perm::parse(&pi.image_string(), &alphabet).unwrap(), pi);
    }
});
