//! Watch the odd-λ solver mark irrelevant edges on a long cycle.
//!
//! A cycle at λ = 1 has only deletable edges yet admits no 2-edge deletion
//! set. Once the cycle is long enough, the solver proves this by repeatedly
//! decomposing the graph into a ring of blocks and marking one boundary
//! edge irrelevant, until the surviving candidates fit under the structural
//! bound and exhaustive search settles the answer.
//!
//! ```bash
//! cargo run -p lambda-ecs --example irrelevant_edges
//! ```

use lambda_ecs::graph::Graph;
use lambda_ecs::solver::{solve_odd, SolveOutcome};

fn main() {
    let n = 50;
    let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), false).unwrap();
    let (outcome, diag) = solve_odd(&g, 1, 2).unwrap();

    for (i, ev) in diag.markings.iter().enumerate() {
        println!(
            "marking {}: edge {} (irrelevant set had {} edges)",
            i + 1,
            ev.marked.index(),
            ev.before.len()
        );
    }
    match outcome {
        SolveOutcome::Found(ds) => println!("found a deletion set: {:?}", ds.edges),
        SolveOutcome::Certificate(cert) => println!(
            "certificate: {} candidates remain (bound {}); exhaustive search would answer NO",
            cert.candidates.len(),
            cert.bound
        ),
    }
}
