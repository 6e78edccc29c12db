fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match evoterm::cli::execute(&args) {
        Ok(stdout) => print!("{}", stdout),
        Err(err) => {
            eprintln!("error: {}", err);
            std::process::exit(1);
        }
    }
}
