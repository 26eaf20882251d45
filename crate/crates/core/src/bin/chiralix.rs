fn main() {
    std::process::exit(chiralix::cli::run(std::env::args_os()));
}
