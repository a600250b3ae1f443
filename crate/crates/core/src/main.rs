fn main() {
    std::process::exit(codim2::cli::run(std::env::args_os()));
}
