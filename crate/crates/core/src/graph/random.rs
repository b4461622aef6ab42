//! Seeded random graphs.
//!
//! Every generator draws from a SplitMix64 stream seeded with the caller's
//! 64-bit seed. Vertex pairs are visited in lexicographic order
//! `(0,1), (0,2), …, (0,n-1), (1,2), …`.
//!
//! * [`RandomModel::Probability`]: for each pair draw `u = (next >> 11) · 2⁻⁵³`
//!   and keep the pair iff `u < p`.
//! * [`RandomModel::Edges`]: choose `m` distinct pair indices with
//!   `rand::seq::index::sample` over the same stream.

use super::{check_cap, Graph};
use crate::error::{Error, Result};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

/// The generator behind all seeded sampling in the crate.
pub type SplitMixStream = SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RandomModel {
    /// Each pair independently with probability `p`.
    Probability(f64),
    /// Exactly this many edges, uniformly.
    Edges(usize),
}

pub(crate) fn pair_at(n: usize, idx: usize) -> (usize, usize) {
    // row-major over u < v
    let mut u = 0;
    let mut rem = idx;
    loop {
        let row = n - 1 - u;
        if rem < row {
            return (u, u + 1 + rem);
        }
        rem -= row;
        u += 1;
    }
}

pub fn random_graph(n: usize, model: RandomModel, seed: u64) -> Result<Graph> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    random_graph_with(n, model, &mut rng)
}

pub fn random_graph_with<R: Rng + ?Sized>(n: usize, model: RandomModel, rng: &mut R) -> Result<Graph> {
    check_cap(n)?;
    let slots = n * n.saturating_sub(1) / 2;
    let mut g = Graph::new(n)?;
    match model {
        RandomModel::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::param(format!("probability {p} outside [0,1]")));
            }
            for u in 0..n {
                for v in u + 1..n {
                    let x = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    if x < p {
                        g.add_edge_unchecked(u, v);
                    }
                }
            }
        }
        RandomModel::Edges(m) => {
            if m > slots {
                return Err(Error::param(format!("{m} edges exceed C({n},2) = {slots}")));
            }
            for idx in index::sample(rng, slots, m).into_iter() {
                let (u, v) = pair_at(n, idx);
                g.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(g)
}
