//! Classify every edge of a small instance as deletable or undeletable.
//!
//! ```bash
//! cargo run -p lambda-ecs --example classify_edges
//! ```

use lambda_ecs::classify::classify_edges;
use lambda_ecs::gen::gen_ham_union;
use lambda_ecs::graph::EdgeMask;

fn main() {
    let lambda = 2;
    let g = gen_ham_union(8, lambda, 5, 42, false).unwrap();
    println!(
        "instance: n = {}, m = {}, lambda = {}",
        g.vertex_count(),
        g.edge_count(),
        lambda
    );

    let classification = classify_edges(&g, &EdgeMask::empty(&g), lambda, None).unwrap();
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        let verdict = if classification.is_deletable(e) {
            "deletable"
        } else {
            "undeletable"
        };
        println!("edge {:>2}  ({} - {})  {}", e.index(), u, v, verdict);
    }
    println!(
        "{} deletable, {} undeletable",
        classification.deletable.len(),
        classification.undeletable.len()
    );
}
