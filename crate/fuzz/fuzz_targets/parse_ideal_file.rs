#![no_main]

use libfuzzer_sys::fuzz_target;
use stdbasis::{format_ideal_file, parse_ideal_file};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse_ideal_file(text) {
        let again = parse_ideal_file(&format_ideal_file(file.nvars, file.field, &file.generators)).unwrap();
        assert_eq!(again.generators, file.generators);
    }
});
