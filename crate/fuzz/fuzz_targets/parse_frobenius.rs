#![no_main]

use detcount::FrobeniusCoords;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(fc) = s.parse::<FrobeniusCoords>() {
        let y = fc.to_partition();
        assert_eq!(y.frobenius(), fc);
    }
});
