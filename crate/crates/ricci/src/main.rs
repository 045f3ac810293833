use clap::Parser;

fn main() {
    let cli = ricci::cli::Cli::parse();
    std::process::exit(ricci::cli::run(cli));
}
