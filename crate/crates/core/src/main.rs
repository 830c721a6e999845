fn main() {
    std::process::exit(qbern::cli::main_with_args(std::env::args_os()));
}
