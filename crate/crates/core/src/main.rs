use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = std::io::stdout().lock();
    let code = smcop_core::cli::dispatch(std::env::args(), &mut out);
    ExitCode::from(code as u8)
}
