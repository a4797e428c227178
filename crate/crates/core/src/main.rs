fn main() {
    std::process::exit(twonorm::cli::main_with_args(std::env::args_os()));
}
