fn main() -> std::process::ExitCode {
    heis::cli::run()
}
