fn main() -> std::process::ExitCode {
    bwlattice::cli::run()
}
