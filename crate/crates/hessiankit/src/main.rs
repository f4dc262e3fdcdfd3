use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = hessiankit::cli::Cli::parse();
    std::process::ExitCode::from(hessiankit::cli::run(cli) as u8)
}
