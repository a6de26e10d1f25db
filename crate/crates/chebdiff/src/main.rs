fn main() {
    std::process::exit(chebdiff::cli::run_cli(std::env::args_os()));
}
