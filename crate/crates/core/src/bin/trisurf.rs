use std::io::Write;

fn main() {
    let outcome = trisurf::cli::run(std::env::args_os());
    // a closed pipe downstream is not an error worth reporting
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
