fn main() {
    std::process::exit(neutroprob::cli::run_from_env());
}
