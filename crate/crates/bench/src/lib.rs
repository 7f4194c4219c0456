//! Shared inputs for the criterion benches.

use vcsharp_core::kernel::{antichain, chain, lex_sum, product_of, FinStruct};

/// Product of chains with the given lengths.
pub fn grid(dims: &[usize]) -> FinStruct {
    product_of(&dims.iter().map(|&n| chain(n)).collect::<Vec<_>>())
}

/// `depth` levels, each an antichain of `width` points above the last.
pub fn layered(depth: usize, width: usize) -> FinStruct {
    lex_sum(&chain(depth), &vec![antichain(width); depth]).expect("parts match the index")
}

/// `s` with its elements reversed.
pub fn reversed(s: &FinStruct) -> FinStruct {
    let n = s.size();
    s.relabel(&(0..n).rev().collect::<Vec<_>>())
        .expect("a permutation")
}
