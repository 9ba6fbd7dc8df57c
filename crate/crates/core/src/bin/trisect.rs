use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = trisect::cli::run(std::env::args_os(), &mut io::stdin().lock(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
