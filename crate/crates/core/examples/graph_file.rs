//! Reads a resolution graph file and computes the Alexander polynomial from
//! the graph alone.
//!
//!     cargo run --example graph_file -- path/to/graph.json

use plane_alexander::io::parse_graph;
use plane_alexander::resolution::{dead_end_data, en_alexander};

const TACNODE: &str = r#"{
  "r": 2,
  "vertices": [{"id": 1, "m": [1, 1]}, {"id": 2, "m": [2, 2]}],
  "edges": [[1, 2]],
  "arrows": [{"vertex": 2, "branch": 1}, {"vertex": 2, "branch": 2}],
  "root": 1
}"#;

fn main() -> plane_alexander::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => TACNODE.to_string(),
    };
    let g = parse_graph(&text)?;
    let bound = match dead_end_data(&g) {
        Some(d) => {
            println!("dead-end multiplicities {:?}, n = {:?}", d.generators, d.n);
            2 * d.conductor().unwrap_or(0) + 2
        }
        None => 0,
    };
    print!("{}", en_alexander(&g, bound)?.to_lines());
    Ok(())
}
