fn main() {
    std::process::exit(trivalent::cli::main(std::env::args_os()));
}
