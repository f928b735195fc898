fn main() {
    std::process::exit(bchromatic::cli::run(std::env::args_os()));
}
