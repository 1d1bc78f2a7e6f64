fn main() {
    let (code, out) = hypoly_cli::run(std::env::args_os());
    println!("{out}");
    std::process::exit(code);
}
