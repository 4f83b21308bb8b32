#![no_main]

use libfuzzer_sys::fuzz_target;
use stdbasis::OrderSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for d in 1..=4 {
        if let Ok(ord) = OrderSpec::parse(text, d) {
            assert_eq!(OrderSpec::parse(&ord.to_string(), d).unwrap(), ord);
        }
    }
});
