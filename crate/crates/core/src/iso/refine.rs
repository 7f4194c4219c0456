//! Colour refinement to an equitable ordered partition.
//!
//! Colours are dense ranks `0..k`. Every step is a function of the current
//! colouring and the relation only, so isomorphic inputs with corresponding
//! colourings refine identically; the returned trace token summarises the
//! step and is compared across structures to prune the search.

use crate::kernel::FinStruct;

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0100_0000_01b3;

pub(crate) fn fnv_mix(h: u64, v: u64) -> u64 {
    let mut h = h;
    for byte in v.to_le_bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(FNV_PRIME);
    }
    h
}

pub(crate) fn color_count(colors: &[u32]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

/// Refines `colors` in place and returns the trace token of the whole run.
pub(crate) fn refine(s: &FinStruct, colors: &mut [u32]) -> u64 {
    let n = s.size();
    let mut trace = FNV_OFFSET;
    if n == 0 {
        return trace;
    }
    let mut k = color_count(colors);
    loop {
        // signature: old colour, loop bit, then per (colour, in/out pattern) counts
        let width = 4 * k;
        let mut sig = vec![0u32; n * (width + 2)];
        for x in 0..n {
            let base = x * (width + 2);
            sig[base] = colors[x];
            sig[base + 1] = s.related(x, x) as u32;
            for y in 0..n {
                if y == x {
                    continue;
                }
                let pattern = (s.related(x, y) as usize) | (s.related(y, x) as usize) << 1;
                if pattern != 0 {
                    sig[base + 2 + 4 * colors[y] as usize + pattern] += 1;
                }
            }
        }
        let row = |x: usize| &sig[x * (width + 2)..(x + 1) * (width + 2)];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&x, &y| row(x).cmp(row(y)));
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for w in 0..n {
            if w > 0 && row(order[w]) != row(order[w - 1]) {
                rank += 1;
            }
            next[order[w]] = rank;
        }
        let new_k = rank as usize + 1;
        // fold the sorted distinct signatures and their multiplicities
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && row(order[end]) == row(order[start]) {
                end += 1;
            }
            for &v in row(order[start]) {
                trace = fnv_mix(trace, v as u64);
            }
            trace = fnv_mix(trace, (end - start) as u64);
            start = end;
        }
        colors.copy_from_slice(&next);
        if new_k == k {
            return trace;
        }
        k = new_k;
    }
}

/// Gives `v` a cell of its own placed directly after the rest of its old cell.
pub(crate) fn individualize(colors: &mut [u32], v: usize) {
    for c in colors.iter_mut() {
        *c *= 2;
    }
    colors[v] += 1;
    let mut distinct: Vec<u32> = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for c in colors.iter_mut() {
        *c = distinct.binary_search(c).unwrap() as u32;
    }
}

/// First non-singleton cell, as a sorted list of its members.
pub(crate) fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = color_count(colors);
    let mut counts = vec![0usize; k];
    for &c in colors {
        counts[c as usize] += 1;
    }
    let c = counts.iter().position(|&m| m > 1)? as u32;
    Some((0..colors.len()).filter(|&x| colors[x] == c).collect())
}
