fn main() -> std::process::ExitCode {
    relaxcolor::cli::main()
}
