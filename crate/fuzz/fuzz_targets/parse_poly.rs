#![no_main]

use libfuzzer_sys::fuzz_target;
use stdbasis::{parse_poly, PrimeField};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for p in [7, 32003] {
        let field = PrimeField::new(p).unwrap();
        if let Ok(f) = parse_poly(text, 6, field) {
            assert_eq!(parse_poly(&f.to_string(), 6, field).unwrap(), f);
        }
    }
});
