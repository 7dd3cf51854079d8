fn main() {
    std::process::exit(surfacecodes::cli::run());
}
