fn main() {
    std::process::exit(qpwb::cli::main_with_args(std::env::args_os()));
}
