use std::io::Write;

use braidforge::{run, Cli};
use clap::Parser;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = run(&cli);
    if let Some(d) = &outcome.diagnostic {
        eprintln!("error: {d}");
    }
    print!("{}", outcome.text);
    let _ = std::io::stdout().flush();
    std::process::exit(outcome.code);
}
