fn main() -> std::process::ExitCode {
    cpshift::cli::main()
}
