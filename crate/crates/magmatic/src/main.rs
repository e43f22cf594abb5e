fn main() {
    std::process::exit(magmatic::cli::run());
}
