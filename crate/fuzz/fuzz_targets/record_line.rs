#![no_main]

use harness::ExperimentRecord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = ExperimentRecord::from_line(text) {
        assert_eq!(ExperimentRecord::from_line(&r.to_line()).unwrap(), r);
    }
});
