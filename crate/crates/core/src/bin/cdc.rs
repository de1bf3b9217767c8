fn main() {
    std::process::exit(cdc::cli::main());
}
