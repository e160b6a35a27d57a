fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (stdout, stderr, code) = entwining_cli::cli::run(&args);
    print!("{stdout}");
    eprint!("{stderr}");
    std::process::exit(code);
}
