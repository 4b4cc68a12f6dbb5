//! Command-line front end: argument parsing, command execution and
//! deterministic report rendering.

pub mod config;
pub mod report;
pub mod run;

pub use config::{parse_args, RunConfig, UsageError};
pub use run::{run, Outcome};

/// Full pipeline from argv (program name first) to exit code and output.
pub fn main_with_args<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    match parse_args(argv) {
        Ok(cfg) => run(&cfg),
        Err(UsageError::Info(text)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Err(UsageError::Invalid(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\nhint: run `smeared --help` for usage\n"),
        },
    }
}
