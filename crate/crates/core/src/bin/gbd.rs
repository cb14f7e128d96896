use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = gbdetect::cli::run(std::env::args_os().skip(1));
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(out.code as u8)
}
