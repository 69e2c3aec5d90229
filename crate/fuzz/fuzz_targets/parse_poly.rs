#![no_main]

use detcount::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<LaurentPoly>() {
        let back: LaurentPoly = p.to_string().parse().expect("display output parses");
        assert_eq!(back, p);
    }
});
