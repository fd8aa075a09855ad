fn main() {
    std::process::exit(small_overlap::cli::run(std::env::args_os()));
}
