//! Build a nested chain of minimum cuts around a removed edge.
//!
//! Removing one parallel copy from a doubled cycle turns every other edge
//! newly undeletable; the witness edges along one path then pin down a
//! strictly nested family of λ-cuts, one witness per cut.
//!
//! ```bash
//! cargo run -p lambda-ecs --example cut_chains
//! ```

use lambda_ecs::chain::{build_chain, witness_edges};
use lambda_ecs::classify::newly_undeletable;
use lambda_ecs::graph::{EdgeId, EdgeMask, Graph};

fn main() {
    let n = 10;
    let lambda = 3;
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, (i + 1) % n));
    }
    let g = Graph::new(n, edges, false).unwrap();
    let e_star = EdgeId(0);
    let empty = EdgeMask::empty(&g);

    let d = newly_undeletable(&g, &empty, lambda, e_star, None).unwrap();
    println!("doubled C{}: |D(e*)| = {} after removing edge 0", n, d.len());

    let ell = d.len() / lambda;
    let witness = witness_edges(&g, &empty, lambda, e_star, ell.min(5), None).unwrap();
    println!(
        "witnesses along the heaviest path: {:?}",
        witness.edges.iter().map(|e| e.index()).collect::<Vec<_>>()
    );

    let chain = build_chain(&g, &empty, lambda, &witness).unwrap();
    for (i, cut) in chain.cuts.iter().enumerate() {
        let inside: Vec<usize> = cut.side().iter().collect();
        println!(
            "C{} (witness edge {:>2}): {:?}",
            i + 1,
            chain.witnesses[i].index(),
            inside
        );
    }
}
