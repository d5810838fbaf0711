fn main() {
    std::process::exit(turan4::cli::main_with_args(std::env::args_os()));
}
