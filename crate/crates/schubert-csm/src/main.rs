fn main() {
    std::process::exit(schubert_csm::cli::run());
}
