fn main() {
    std::process::exit(onomast::cli::main_with_args(std::env::args_os()));
}
