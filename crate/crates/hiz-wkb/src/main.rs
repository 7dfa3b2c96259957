use clap::Parser;

fn main() {
    let cli = hiz_wkb::cli::Cli::parse();
    std::process::exit(hiz_wkb::cli::run(cli));
}
