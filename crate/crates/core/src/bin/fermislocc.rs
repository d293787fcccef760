fn main() {
    std::process::exit(fermislocc::cli::run(std::env::args().collect()));
}
