use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let code = domset::cli::dispatch(&argv, &mut out, &mut stderr.lock());
    let _ = out.flush();
    std::process::exit(code);
}
