//! Finite samples of the orders denoted by terms.

use super::term::{Node, OtTerm};
use crate::error::{Error, Result};
use crate::kernel::{chain, FinStruct};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Neighbour information for the two ends of a sample.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Boundary {
    /// Does the first sampled element have an immediate predecessor?
    pub has_immediate_predecessor: bool,
    /// Does the last sampled element have an immediate successor?
    pub has_immediate_successor: bool,
}

/// A finite suborder of a denoted order, listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizedSample {
    pub order: FinStruct,
    /// `adjacency[i]` iff element `i + 1` immediately follows element `i`.
    pub adjacency: Vec<bool>,
    pub boundary: Boundary,
}

struct Piece {
    len: usize,
    adjacency: Vec<bool>,
    is_min: bool,
    is_max: bool,
    first_has_pred: bool,
    last_has_succ: bool,
}

fn sample(t: &OtTerm, budget: usize, rng: &mut ChaCha8Rng) -> Piece {
    match t.node() {
        Node::One => Piece {
            len: 1,
            adjacency: Vec::new(),
            is_min: true,
            is_max: true,
            first_has_pred: false,
            last_has_succ: false,
        },
        Node::Sum(parts) => {
            let mut acc = sample(&parts[0], budget, rng);
            for p in &parts[1..] {
                let right = sample(p, budget, rng);
                acc.adjacency.push(acc.is_max && right.is_min);
                acc.adjacency.extend(right.adjacency);
                acc.len += right.len;
                acc.is_max = right.is_max;
                acc.last_has_succ = right.last_has_succ;
            }
            acc
        }
        Node::Shuffle(members) => {
            let mut slots: Vec<usize> = (0..budget).collect();
            slots.shuffle(rng);
            let mut member_of = vec![0usize; budget];
            for (r, &slot) in slots.iter().enumerate() {
                member_of[slot] = r % members.len();
            }
            let inner = (budget / 2).max(1);
            let mut out = Piece {
                len: 0,
                adjacency: Vec::new(),
                is_min: false,
                is_max: false,
                first_has_pred: false,
                last_has_succ: false,
            };
            for (i, &m) in member_of.iter().enumerate() {
                let p = sample(&members[m], inner, rng);
                if i == 0 {
                    out.first_has_pred = !p.is_min && p.first_has_pred;
                } else {
                    out.adjacency.push(false);
                }
                out.adjacency.extend(p.adjacency);
                out.len += p.len;
                out.last_has_succ = !p.is_max && p.last_has_succ;
            }
            out
        }
    }
}

/// Samples the order denoted by `t`.
///
/// Sums concatenate the samples of their summands. A shuffle fills `budget`
/// slots of the dense skeleton, each with a sample of one member taken with
/// half the budget; members go to slots round-robin over a seeded
/// permutation, so every member appears once `budget ≥ |F|`. The sample
/// size depends on `t` and `budget` only.
pub fn realize(t: &OtTerm, budget: usize, seed: u64) -> Result<RealizedSample> {
    if budget == 0 {
        return Err(Error::input("realisation budget must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = sample(t, budget, &mut rng);
    Ok(RealizedSample {
        order: chain(p.len),
        adjacency: p.adjacency,
        boundary: Boundary {
            has_immediate_predecessor: p.first_has_pred,
            has_immediate_successor: p.last_has_succ,
        },
    })
}
