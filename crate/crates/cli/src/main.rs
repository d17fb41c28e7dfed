use clap::error::ErrorKind;
use clap::Parser;

use algdens_cli::{run, Cli, RunConfig, EXIT_INPUT};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            e.exit()
        }
        Err(e) => {
            let _ = e.print();
            std::process::exit(EXIT_INPUT);
        }
    };
    std::process::exit(run(RunConfig::from(cli)));
}
