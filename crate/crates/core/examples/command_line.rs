//! Drives the command line front end in process.
//!
//!     cargo run --example command_line -- alexander --via fibers data/tacnode.json

fn main() {
    let mut argv = vec!["plane-alexander".to_string()];
    argv.extend(std::env::args().skip(1));
    if argv.len() == 1 {
        argv.extend([
            "verify".into(),
            concat!(env!("CARGO_MANIFEST_DIR"), "/data/tacnode.json").into(),
        ]);
    }
    let out = plane_alexander::cli::run_command(argv);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
