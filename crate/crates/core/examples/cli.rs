//! Drive the command line in-process, as the `schern` binary does.
//!
//! cargo run --example cli -- --no-cache table --case sl8-mu2

fn main() {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let mut args: Vec<String> = std::env::args().collect();
    if args.len() == 1 {
        args.extend(["--no-cache", "c2", "8", "2,2,2", "--method", "both"].map(String::from));
    }
    std::process::exit(schern::cli::run(args, &mut out, &mut err));
}
