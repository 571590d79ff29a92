//! Resolves a curve and prints its dual graph, the vertex classes and the
//! intersection multiplicities between branches.
//!
//!     cargo run --example resolve_curve -- cusp-tangent-line

use plane_alexander::corpus;
use plane_alexander::io::emit_graph;
use plane_alexander::resolution::{
    classify_graph, conductor_bound, noether_intersections, resolve, ResolveOptions,
};

fn main() -> plane_alexander::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "cusp-tangent-line".into());
    let curve = corpus::by_name(&name).expect("unknown corpus curve");
    let res = resolve(&curve, &ResolveOptions::default())?;
    print!("{}", emit_graph(&res.graph));

    let class = classify_graph(&res.graph);
    println!("dead ends: {:?}", class.dead_ends);
    println!("star points: {:?}", class.star_points);
    for ((i, j), v) in &class.separation_points {
        println!("branches {} and {} separate at vertex {v}", i + 1, j + 1);
    }
    for v in res.graph.vertices() {
        println!(
            "vertex {}: m = {:?}, chi = {}",
            v.id,
            v.m,
            res.graph.chi_open(v.id)?
        );
    }
    for (i, row) in noether_intersections(&res).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|o| o.to_string()).collect();
        println!("C{} . C_j = [{}]", i + 1, cells.join(", "));
    }
    println!("conductor bound: {}", conductor_bound(&res));
    Ok(())
}
