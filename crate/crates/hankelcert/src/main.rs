fn main() {
    std::process::exit(hankelcert::cli::run());
}
