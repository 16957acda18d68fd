use std::process::ExitCode;

fn main() -> ExitCode {
    y00lab::cli::run()
}
