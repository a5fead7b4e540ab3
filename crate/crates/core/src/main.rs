fn main() {
    std::process::exit(fermat_forge::cli::main_with_args(std::env::args_os()));
}
