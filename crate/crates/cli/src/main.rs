use clap::Parser;

use syzygy_cli::cmd::{run, Cli};
use syzygy_cli::report::CliError;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        let code = match e {
            CliError::Validation(_) => 1,
            CliError::Usage(_) => 2,
        };
        std::process::exit(code);
    }
}
