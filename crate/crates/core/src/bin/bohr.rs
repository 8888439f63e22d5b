fn main() -> std::process::ExitCode {
    bohr_radius::cli::run()
}
