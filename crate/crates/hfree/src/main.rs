fn main() {
    std::process::exit(hfree::cli::run(std::env::args()));
}
