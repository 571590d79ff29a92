//! Runs every cross check on every built-in curve.

use plane_alexander::verify::{all_passed, verify};
use plane_alexander::{corpus, AnalysisOptions};

fn main() -> plane_alexander::Result<()> {
    let mut ok = true;
    for c in corpus::all() {
        println!("== {}", c.name.as_deref().unwrap_or("?"));
        let results = verify(&c, &AnalysisOptions::default())?;
        for r in &results {
            println!("{r}");
        }
        ok &= all_passed(&results);
    }
    std::process::exit(if ok { 0 } else { 1 });
}
