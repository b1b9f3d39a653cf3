fn main() {
    std::process::exit(smallcancel::cli::run(std::env::args_os()));
}
