use clap::Parser;

fn main() {
    let cli = rootsep::cli::Cli::parse();
    std::process::exit(rootsep::cli::execute(cli));
}
