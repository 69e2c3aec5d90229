#![no_main]

use libfuzzer_sys::fuzz_target;

// NUL-separated argument vectors. A tiny budget keeps oracle commands cheap;
// sizes are capped so determinant commands stay small.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let args: Vec<&str> = s.split('\0').collect();
    if args.len() > 16 || args.iter().any(|a| a.parse::<u64>().is_ok_and(|v| v > 6)) {
        return;
    }
    let mut argv = vec!["detcount", "--budget", "2000"];
    argv.extend(args.iter().copied().filter(|a| !a.starts_with("--out")));
    let resp = detcount_cli::run(argv);
    assert!(resp.code <= 3);
});
