fn main() {
    std::process::exit(cominuscule_cli::run(std::env::args_os()));
}
