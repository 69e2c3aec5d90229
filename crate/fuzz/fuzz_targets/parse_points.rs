#![no_main]

use detcount::oracles::{parse_points, Constraint};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(points) = parse_points(s) {
        let text: Vec<String> = points.iter().map(ToString::to_string).collect();
        assert_eq!(parse_points(&text.join(",")).unwrap(), points);
    }
    let _ = s.parse::<Constraint>();
});
