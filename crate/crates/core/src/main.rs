fn main() {
    std::process::exit(polytrim::cli::main_entry());
}
