//! Command-line front end and file formats for the Max-Cut QAOA toolkit.

pub mod cli;
pub mod commands;
pub mod format;
pub mod input;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use commands::UsageError;

/// Exit code for a failed computation or I/O error.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for invalid flags or flag combinations.
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match cli::Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match commands::execute(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            if e.is::<UsageError>() {
                EXIT_USAGE
            } else {
                EXIT_FAILURE
            }
        }
    }
}
