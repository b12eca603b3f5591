#![no_main]

use libfuzzer_sys::fuzz_target;
use riley_core::text::{parse_bipoly, parse_poly, render_bi, render_uni};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_bipoly(s) {
        assert_eq!(parse_bipoly(&render_bi(&f)).unwrap(), f);
    }
    if let Ok(p) = parse_poly(s, 'y') {
        assert_eq!(parse_poly(&render_uni(&p, 'y'), 'y').unwrap(), p);
    }
});
