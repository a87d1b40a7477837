fn main() {
    std::process::exit(plutchik::cli::run(std::env::args_os()));
}
