use std::process;

use clap::Parser;

use elpwv::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    process::exit(code);
}
