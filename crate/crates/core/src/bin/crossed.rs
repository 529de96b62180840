fn main() {
    let status = crossed_monoids::cli::run(std::env::args_os(), &mut std::io::stdout());
    std::process::exit(status);
}
