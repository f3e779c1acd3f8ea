fn main() {
    std::process::exit(trigsum::cli::run(std::env::args_os()));
}
