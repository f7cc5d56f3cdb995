use clap::Parser;

use fh_diagram_cli::args::Cli;
use fh_diagram_cli::commands::run;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("fhdiag: {e}");
        std::process::exit(e.exit_code());
    }
}
