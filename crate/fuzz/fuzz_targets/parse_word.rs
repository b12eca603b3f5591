#![no_main]

use libfuzzer_sys::fuzz_target;
use riley_core::SchubertWord;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = s.parse::<SchubertWord>() {
        assert_eq!(w.to_ascii().parse::<SchubertWord>().unwrap(), w);
        assert_eq!(w.to_string().parse::<SchubertWord>().unwrap(), w);
        assert_eq!(SchubertWord::from_epsilons(&w.epsilons()).unwrap(), w);
    }
});
