//! The Alexander polynomial by all three routes: the resolution graph, the
//! Poincaré polynomial of the filtration, and the fiber Euler series.
//!
//!     cargo run --example three_routes -- three-lines

use plane_alexander::{corpus, Analysis, AnalysisOptions};

fn main() -> plane_alexander::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let curves = if names.is_empty() {
        corpus::all()
    } else {
        names
            .iter()
            .map(|n| corpus::by_name(n).expect("unknown corpus curve"))
            .collect()
    };
    for c in curves {
        let a = Analysis::new(&c, &AnalysisOptions::default())?;
        let graph = a.alexander()?;
        let poincare = a.poincare()?;
        let fibers = a.fiber_series()?;
        println!(
            "{} (r = {}, conductor {})",
            c.name.as_deref().unwrap_or("?"),
            c.r(),
            a.conductor()
        );
        println!("  resolution: {graph}");
        println!("  poincare:   {poincare}");
        println!("  fibers:     {fibers}");
        println!("  agree: {}", graph == poincare && poincare == fibers);
    }
    Ok(())
}
