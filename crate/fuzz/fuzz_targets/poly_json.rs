#![no_main]

use libfuzzer_sys::fuzz_target;
use riley_core::json::{bipoly_from_json, bipoly_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = bipoly_from_json(s) {
        let again = bipoly_to_json(&f);
        assert_eq!(bipoly_from_json(&again).unwrap(), f);
    }
});
