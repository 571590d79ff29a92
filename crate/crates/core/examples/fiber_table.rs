//! Filtration dimensions and fiber Euler characteristics on a small box.
//!
//!     cargo run --example fiber_table -- node

use plane_alexander::exactmath::ExpVec;
use plane_alexander::filtration::Filtration;
use plane_alexander::{corpus, Analysis, AnalysisOptions};

fn main() -> plane_alexander::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "three-lines".into());
    let c = corpus::by_name(&name).expect("unknown corpus curve");
    let a = Analysis::new(&c, &AnalysisOptions::default())?;
    let r = c.r();
    let delta = a.conductor();
    let f = Filtration::new(&c, &(delta + &ExpVec::splat(r, 2)))?;
    println!(
        "{} jet rows for window {}",
        f.jets().rows().len(),
        f.window()
    );
    println!("v\tb\tc\tchi");
    for v in ExpVec::box_points(&ExpVec::zeros(r), delta) {
        println!(
            "{v}\t{}\t{}\t{}",
            f.b_dim(&v)?,
            f.c_dim(&v)?,
            f.fiber_euler(&v)?
        );
    }
    println!("P' = {}", a.pprime()?);
    Ok(())
}
