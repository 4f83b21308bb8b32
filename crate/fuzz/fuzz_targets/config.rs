#![no_main]

use harness::Config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = Config::parse(text) {
        cfg.validate().unwrap();
        let _ = cfg.policy();
    }
});
