fn main() {
    std::process::exit(schubert_cones::cli::run());
}
