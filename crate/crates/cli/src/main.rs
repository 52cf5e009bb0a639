use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_tol = std::env::var(lorentz_cli::TOL_ENV).ok();
    let code = lorentz_cli::run(
        std::env::args_os(),
        env_tol,
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
