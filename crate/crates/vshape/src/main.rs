fn main() {
    std::process::exit(vshape::cli::cli_main(std::env::args_os()));
}
