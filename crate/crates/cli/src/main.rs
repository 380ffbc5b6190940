fn main() -> std::process::ExitCode {
    gyre::app::main()
}
