fn main() {
    std::process::exit(ffnet::cli::run(std::env::args_os()));
}
