//! Maximum-weight deletion set of size at most k, cross-checked against the
//! brute-force oracle.
//!
//! ```bash
//! cargo run -p lambda-ecs --example weighted_max
//! ```

use lambda_ecs::gen::{gen_ham_union, with_random_weights};
use lambda_ecs::oracle::oracle_max_weight;
use lambda_ecs::solver::solve_weighted;
use std::collections::BTreeSet;

fn main() {
    let base = gen_ham_union(8, 2, 6, 11, false).unwrap();
    let g = with_random_weights(&base, 9, 23);
    let (lambda, k) = (2, 3);

    let sol = solve_weighted(&g, lambda, k, 100_000_000).unwrap();
    println!(
        "solver: weight {} via edges {:?}",
        sol.weight,
        sol.edges.iter().map(|e| e.index()).collect::<Vec<_>>()
    );

    let (best, witness) = oracle_max_weight(&g, lambda, k, &BTreeSet::new(), false).unwrap();
    println!(
        "oracle: weight {} via edges {:?}",
        best,
        witness.iter().map(|e| e.index()).collect::<Vec<_>>()
    );
    assert_eq!(sol.weight, best);
    println!("agreement: OK");
}
