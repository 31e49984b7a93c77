fn main() {
    std::process::exit(nefcalc::cli::main());
}
