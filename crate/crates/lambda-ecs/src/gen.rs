//! Seeded generators of λ-connected test instances.
//!
//! A directed Hamiltonian cycle crosses every directed cut at least once, so
//! λ edge-disjoint ones give λ-edge-connectivity; undirected cycles cross
//! every cut at least twice, so ⌈λ/2⌉ suffice. Blob cycles arrange dense
//! λ-connected blobs in a ring with exactly (λ+1)/2 edges between
//! neighbors, the structure the odd-λ marking machinery feeds on. Every
//! generated instance is post-verified; identical parameters and seed give
//! identical graphs.

use crate::error::{Error, Result};
use crate::flow::is_lambda_connected;
use crate::graph::{EdgeMask, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn attempt_rng(seed: u64, attempt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn shuffled(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

fn norm(directed: bool, u: usize, v: usize) -> (usize, usize) {
    if directed || u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Union of edge-disjoint random Hamiltonian cycles plus uniformly random
/// non-parallel extra edges, post-verified λ-connected.
pub fn gen_ham_union(
    n: usize,
    lambda: usize,
    extra_edges: usize,
    seed: u64,
    directed: bool,
) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generation("need at least 3 vertices".into()));
    }
    if lambda == 0 {
        return Err(Error::Generation("lambda must be at least 1".into()));
    }
    let cycles = if directed { lambda } else { (lambda + 1) / 2 };
    let room = if directed { n - 1 } else { (n - 1) / 2 };
    if cycles > room {
        return Err(Error::Generation(format!(
            "{} edge-disjoint Hamiltonian cycles do not fit on {} vertices",
            cycles, n
        )));
    }
    'attempt: for attempt in 0..64 {
        let mut rng = attempt_rng(seed, attempt);
        let mut used = std::collections::HashSet::new();
        let mut edges = Vec::new();
        for _ in 0..cycles {
            // disjointness failures are common at small n, so redraw the
            // cycle a bounded number of times before restarting the attempt
            let mut placed = false;
            'cycle: for _ in 0..100 {
                let perm = shuffled(&mut rng, n);
                let candidate: Vec<(usize, usize)> =
                    (0..n).map(|i| (perm[i], perm[(i + 1) % n])).collect();
                for &(u, v) in &candidate {
                    if used.contains(&norm(directed, u, v)) {
                        continue 'cycle;
                    }
                }
                for &(u, v) in &candidate {
                    used.insert(norm(directed, u, v));
                    edges.push((u, v));
                }
                placed = true;
                break;
            }
            if !placed {
                continue 'attempt;
            }
        }
        let mut placed = 0;
        let mut tries = 0;
        while placed < extra_edges {
            tries += 1;
            if tries > 200 * (extra_edges + 1) {
                continue 'attempt;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || !used.insert(norm(directed, u, v)) {
                continue;
            }
            edges.push((u, v));
            placed += 1;
        }
        let g = Graph::new(n, edges, directed)?;
        if is_lambda_connected(&g, &EdgeMask::empty(&g), lambda)? {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no {}-connected Hamiltonian union found for n = {}, seed {}",
        lambda, n, seed
    )))
}

/// `blocks` λ-connected blobs arranged in a ring with exactly (λ+1)/2 edges
/// between consecutive blobs. Small blobs are complete graphs with edges
/// multiplied up to internal λ-connectivity; larger blobs use a local
/// Hamiltonian-cycle union.
pub fn gen_blob_cycle(
    blocks: usize,
    block_size: usize,
    lambda_odd: usize,
    seed: u64,
) -> Result<Graph> {
    if lambda_odd % 2 == 0 || lambda_odd == 0 {
        return Err(Error::Generation("blob cycles need odd lambda".into()));
    }
    if blocks < 3 {
        return Err(Error::Generation("need at least 3 blocks".into()));
    }
    if block_size == 0 {
        return Err(Error::Generation("blocks must be non-empty".into()));
    }
    let boundary = (lambda_odd + 1) / 2;
    let n = blocks * block_size;
    'attempt: for attempt in 0..16u64 {
        let mut rng = attempt_rng(seed, attempt.wrapping_add(101));
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let blob_vertex = |b: usize, i: usize| b * block_size + i;
        for b in 0..blocks {
            if block_size == 1 {
                continue;
            }
            if block_size <= 6 {
                let copies = lambda_odd.div_ceil(block_size - 1);
                for _ in 0..copies {
                    for i in 0..block_size {
                        for j in i + 1..block_size {
                            edges.push((blob_vertex(b, i), blob_vertex(b, j)));
                        }
                    }
                }
            } else {
                let mut used = std::collections::HashSet::new();
                for _ in 0..(lambda_odd + 1) / 2 {
                    let perm = shuffled(&mut rng, block_size);
                    for i in 0..block_size {
                        let (u, v) = (perm[i], perm[(i + 1) % block_size]);
                        if !used.insert(norm(false, u, v)) {
                            continue 'attempt;
                        }
                        edges.push((blob_vertex(b, u), blob_vertex(b, v)));
                    }
                }
            }
        }
        for b in 0..blocks {
            let next = (b + 1) % blocks;
            let off_a = rng.gen_range(0..block_size);
            let off_b = rng.gen_range(0..block_size);
            for i in 0..boundary {
                edges.push((
                    blob_vertex(b, (off_a + i) % block_size),
                    blob_vertex(next, (off_b + i) % block_size),
                ));
            }
        }
        let g = Graph::new(n, edges, false)?;
        if is_lambda_connected(&g, &EdgeMask::empty(&g), lambda_odd)? {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no {}-connected blob cycle with {} blocks of size {}",
        lambda_odd, blocks, block_size
    )))
}

/// Copies the graph with seeded integer weights in 0..=max_weight.
pub fn with_random_weights(g: &Graph, max_weight: u32, seed: u64) -> Graph {
    let mut rng = attempt_rng(seed, 7);
    let weights: Vec<f64> = (0..g.edge_count())
        .map(|_| rng.gen_range(0..=max_weight) as f64)
        .collect();
    let mut out = g.clone();
    out.set_weights(weights).expect("length matches");
    out
}
