//! Semigroup of values of a branch: conductor, minimal generators, an Apéry
//! set, and the structure checks against the resolution graph.
//!
//!     cargo run --example semigroup -- two-pairs

use plane_alexander::corpus;
use plane_alexander::exactmath::ExpVec;
use plane_alexander::semigroup::{
    apery_set, conductor, minimal_generators_r1, verify_semigroup_properties, SemigroupBox,
};

fn main() -> plane_alexander::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "two-pairs".into());
    let c = corpus::by_name(&name).expect("unknown corpus curve");
    let delta = conductor(&c)?;
    println!("conductor {delta}");
    if c.r() > 1 {
        let s = SemigroupBox::compute(&c, &delta)?;
        for v in s.members() {
            println!("member {v}");
        }
        return Ok(());
    }
    let gens = minimal_generators_r1(&c)?;
    println!("generators {gens:?}");
    let s = SemigroupBox::compute(&c, &ExpVec::new(vec![delta[0] + gens[0] as i64]))?;
    println!(
        "apery set for {}: {:?}",
        gens[0],
        apery_set(&s, gens[0] as i64)?
    );
    let report = verify_semigroup_properties(&c)?;
    println!("n = {:?}", report.n);
    for check in &report.checks {
        println!(
            "{}\t{}\t{}",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        );
    }
    Ok(())
}
