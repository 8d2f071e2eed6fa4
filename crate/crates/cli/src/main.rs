fn main() {
    std::process::exit(chanflow_cli::run(std::env::args_os()));
}
