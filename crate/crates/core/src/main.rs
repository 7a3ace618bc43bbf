fn main() {
    std::process::exit(locoh::cli::run(std::env::args_os()));
}
