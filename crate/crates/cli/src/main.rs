use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let resp = detcount_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(resp.stdout.as_bytes());
    let _ = std::io::stderr().write_all(resp.stderr.as_bytes());
    ExitCode::from(resp.code)
}
