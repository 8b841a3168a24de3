fn main() {
    std::process::exit(photon_mux_cli::run(std::env::args_os()));
}
