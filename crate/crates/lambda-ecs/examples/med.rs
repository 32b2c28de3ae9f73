//! Minimum-equivalent-digraph front-end: shed redundant arcs while keeping
//! every reachability relation.
//!
//! ```bash
//! cargo run -p lambda-ecs --example med
//! ```

use lambda_ecs::graph::Graph;
use lambda_ecs::pipeline::{minimum_equivalent_digraph, SolveConfig};

fn main() {
    // two strongly connected triangles, a doubled bridge pair, and a
    // transitive shortcut
    let mut edges: Vec<(usize, usize)> = (0..3).map(|i| (i, (i + 1) % 3)).collect();
    edges.extend((0..3).map(|i| (3 + i, 3 + (i + 1) % 3)));
    edges.push((0, 3));
    edges.push((1, 4));
    edges.push((2, 5));
    let g = Graph::new(6, edges, true).unwrap();
    let cfg = SolveConfig::default();

    println!("digraph with {} arcs", g.edge_count());
    for k in 1..=3 {
        match minimum_equivalent_digraph(&g, k, &cfg).unwrap() {
            Some(med) => println!(
                "k = {}: removable arcs {:?} (reachability re-verified: {})",
                k,
                med.edges.iter().map(|e| e.index()).collect::<Vec<_>>(),
                med.verified
            ),
            None => println!("k = {}: no, every equivalent subdigraph keeps more arcs", k),
        }
    }

    // bidirected K4: 12 arcs, an equivalent subdigraph needs only a 4-cycle
    let mut k4 = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                k4.push((i, j));
            }
        }
    }
    let g = Graph::new(4, k4, true).unwrap();
    let med = minimum_equivalent_digraph(&g, 8, &cfg).unwrap().unwrap();
    println!("bidirected K4: {} of 12 arcs removable", med.edges.len());
}
