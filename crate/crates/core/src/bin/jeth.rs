fn main() {
    std::process::exit(jeth::cli::run(std::env::args_os()));
}
