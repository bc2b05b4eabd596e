fn main() {
    // command-line front end lands with the cli module
    eprintln!("roadcalc: command-line interface not wired up yet");
    std::process::exit(2);
}
