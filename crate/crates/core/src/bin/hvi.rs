fn main() {
    std::process::exit(hvi::cli::run(std::env::args_os()));
}
