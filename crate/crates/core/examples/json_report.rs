// Running a subcommand programmatically and rendering its JSON report.

use std::error::Error;

use pencil_index::cli::{render_report, run_command, CommandRequest, OutputFormat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let request = CommandRequest::parse_from(["pencil-index", "semigroup", "--d", "4", "--n", "2", "--query", "10"])?;
    let report = run_command(&request)?;
    print!("{}", render_report(&report, OutputFormat::Json));
    println!("exit code {}", report.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
