fn main() {
    std::process::exit(hwmod_cli::main_with(std::env::args_os()));
}
