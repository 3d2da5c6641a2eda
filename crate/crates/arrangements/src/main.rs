fn main() {
    std::process::exit(arrangements::cli::run(std::env::args_os()));
}
