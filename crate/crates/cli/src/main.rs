fn main() {
    std::process::exit(dedekind_lab_cli::run(std::env::args_os()));
}
