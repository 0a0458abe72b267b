use clap::Parser;
use graphene_cs_cli::Cli;

fn main() {
    let cli = Cli::parse();
    std::process::exit(graphene_cs_cli::run(&cli));
}
