fn main() {
    std::process::exit(esmc::cli::main(std::env::args_os()));
}
