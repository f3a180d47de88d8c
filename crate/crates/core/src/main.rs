fn main() {
    std::process::exit(shicat::cli::run(std::env::args_os()));
}
