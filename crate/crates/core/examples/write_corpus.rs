//! Writes every built-in curve as a curve file into a directory.
//!
//!     cargo run --example write_corpus -- data

use plane_alexander::corpus;
use plane_alexander::io::emit_curve;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".into());
    std::fs::create_dir_all(&dir)?;
    for c in corpus::all() {
        let name = c.name.clone().expect("corpus curves are named");
        let path = std::path::Path::new(&dir).join(format!("{name}.json"));
        std::fs::write(&path, emit_curve(&c))?;
        println!("{}", path.display());
    }
    Ok(())
}
