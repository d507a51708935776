fn main() {
    std::process::exit(infraholes::cli::run(std::env::args_os()));
}
