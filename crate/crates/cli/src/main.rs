fn main() {
    std::process::exit(moduli_lab_cli::run(std::env::args_os()));
}
