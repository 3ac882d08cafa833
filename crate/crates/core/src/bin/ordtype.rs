fn main() {
    let (_, code) = ordtype::cli::run_command(std::env::args_os());
    std::process::exit(code);
}
