#![no_main]

use detcount::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(y) = s.parse::<Partition>() {
        assert_eq!(y.to_string().parse::<Partition>().unwrap(), y);
        assert_eq!(y.conjugate().conjugate(), y);
    }
});
