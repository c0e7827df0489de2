fn main() {
    std::process::exit(borehole_breakout::cli::run(std::env::args_os()));
}
