#![no_main]

use libfuzzer_sys::fuzz_target;
use riley_core::rational::{parse_rational, to_fraction_string};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(r) = parse_rational(s) {
        assert_eq!(parse_rational(&to_fraction_string(&r)).unwrap(), r);
        assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }
});
