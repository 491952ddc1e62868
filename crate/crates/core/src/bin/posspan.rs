fn main() {
    std::process::exit(posspan::cli::main_with_args(std::env::args_os()));
}
