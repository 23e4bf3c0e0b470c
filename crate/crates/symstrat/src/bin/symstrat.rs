fn main() {
    std::process::exit(symstrat::cli::run());
}
