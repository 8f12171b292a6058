fn main() {
    std::process::exit(fracton_codes_cli::run(std::env::args_os()));
}
