use std::io::Write;
use std::process::ExitCode;

use permact::harness::cli::{run_args, RunError};

fn main() -> ExitCode {
    match run_args(std::env::args_os()) {
        Ok(out) => {
            if let Some(note) = out.note {
                eprintln!("{note}");
            }
            let _ = std::io::stdout().write_all(&out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(RunError::Usage(e)) => {
            let _ = e.print();
            ExitCode::from(if e.use_stderr() { 2 } else { 0 })
        }
        Err(RunError::Failed(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
