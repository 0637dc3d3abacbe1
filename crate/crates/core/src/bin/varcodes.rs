fn main() {
    std::process::exit(varcodes::cli::main_with_args(std::env::args_os()));
}
