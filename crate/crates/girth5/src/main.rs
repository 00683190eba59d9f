fn main() {
    let code = girth5::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
