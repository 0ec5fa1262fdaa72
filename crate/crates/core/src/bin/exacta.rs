fn main() {
    let (code, out, err) = exacta::cli::dispatch(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    std::process::exit(code);
}
