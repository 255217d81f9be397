fn main() {
    std::process::exit(mfc::cli::run());
}
