use clap::Parser;

fn main() {
    let cli = opclass::cli::Cli::parse();
    match opclass::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
