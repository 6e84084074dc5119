use clap::Parser;

fn main() {
    let cli = wedcli::Cli::parse();
    let code = wedcli::execute(cli).unwrap_or_else(|err| {
        eprintln!("error: {err:#}");
        2
    });
    std::process::exit(code);
}
