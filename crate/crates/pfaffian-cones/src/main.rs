use clap::Parser;
use pfaffian_cones::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((output, code)) => {
            println!("{output}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
