//! Decide whether k edges can be deleted without losing λ-connectivity.
//!
//! The cycle family shows both answers: a single edge of a cycle can always
//! go, a second one never can, and the solver proves the NO side through a
//! bound certificate before the exhaustive step.
//!
//! ```bash
//! cargo run -p lambda-ecs --example find_deletion_set
//! ```

use lambda_ecs::gen::gen_blob_cycle;
use lambda_ecs::graph::Graph;
use lambda_ecs::pipeline::{find_deletion_set_with_report, SolveConfig};

fn main() {
    let cfg = SolveConfig::default();

    let cycle = Graph::new(10, (0..10).map(|i| (i, (i + 1) % 10)).collect(), false).unwrap();
    for k in [1, 2] {
        let (found, report) = find_deletion_set_with_report(&cycle, 1, k, &cfg).unwrap();
        match found {
            Some(ds) => println!(
                "C10, k = {}: YES, remove {:?}",
                k,
                ds.edges.iter().map(|e| e.index()).collect::<Vec<_>>()
            ),
            None => println!(
                "C10, k = {}: NO ({} candidates enumerated under bound {})",
                k,
                report.candidate_count.unwrap_or(0),
                report.certificate_bound.unwrap_or(0)
            ),
        }
    }

    // a ring of dense blobs at odd lambda: internal slack admits a deletion
    let blob = gen_blob_cycle(4, 4, 3, 7).unwrap();
    let (found, _) = find_deletion_set_with_report(&blob, 3, 2, &cfg).unwrap();
    match found {
        Some(ds) => println!(
            "blob cycle (n = {}), lambda = 3, k = 2: YES, remove {:?}",
            blob.vertex_count(),
            ds.edges.iter().map(|e| e.index()).collect::<Vec<_>>()
        ),
        None => println!("blob cycle, lambda = 3, k = 2: NO"),
    }
}
