fn main() {
    std::process::exit(ehrhart::cli::run_main());
}
