//! Generate seeded λ-connected instances and print them in the file format.
//!
//! ```bash
//! cargo run -p lambda-ecs --example generate_instances
//! ```

use lambda_ecs::flow::edge_connectivity;
use lambda_ecs::gen::{gen_blob_cycle, gen_ham_union};
use lambda_ecs::graph::EdgeMask;
use lambda_ecs::io::emit;

fn main() {
    let ham = gen_ham_union(7, 2, 4, 2024, true).unwrap();
    println!(
        "c directed ham-union, verified connectivity {}",
        edge_connectivity(&ham, &EdgeMask::empty(&ham)).unwrap()
    );
    print!("{}", emit(&ham));

    let blob = gen_blob_cycle(5, 2, 3, 9).unwrap();
    println!(
        "c blob cycle, verified connectivity {}",
        edge_connectivity(&blob, &EdgeMask::empty(&blob)).unwrap()
    );
    print!("{}", emit(&blob));
}
