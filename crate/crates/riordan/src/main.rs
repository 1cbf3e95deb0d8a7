fn main() {
    std::process::exit(riordan::cli::run(std::env::args_os()));
}
