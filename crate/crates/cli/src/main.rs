fn main() {
    std::process::exit(rsp_cli::run(std::env::args_os()));
}
