fn main() {
    std::process::exit(geodetic_games::cli::main());
}
