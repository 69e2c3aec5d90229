#![no_main]

use detcount_cli::OutputRecord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(rec) = OutputRecord::from_json(s) {
        // Anything accepted must survive a round trip unchanged.
        let again = OutputRecord::from_json(&rec.to_json()).expect("re-parse");
        assert_eq!(again, rec);
        let _ = rec.to_text();
    }
});
