fn main() {
    std::process::exit(iterline::cli::main_entry());
}
