use clap::Parser;

fn main() {
    let cli = dynkin::cli::Cli::parse();
    std::process::exit(dynkin::cli::main_with(&cli));
}
