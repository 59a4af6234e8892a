use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(overcolored::cli::main_from_args(std::env::args_os()))
}
