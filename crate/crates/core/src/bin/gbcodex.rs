fn main() {
    std::process::exit(gbcodex::cli::run());
}
