use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A finite structure with one binary relation.
///
/// The domain is `0..size`; the relation is stored as one bit row per
/// element. The relation is taken literally: nothing here closes it under
/// reflexivity or transitivity.
#[derive(Clone)]
pub struct FinStruct {
    size: usize,
    words: usize,
    bits: Vec<u64>,
    name: Option<String>,
}

impl FinStruct {
    /// The structure on `size` points with an empty relation.
    pub fn empty_relation(size: usize) -> Self {
        let words = size.div_ceil(64);
        FinStruct {
            size,
            words,
            bits: vec![0; words * size],
            name: None,
        }
    }

    /// Builds a structure from a list of related pairs. Duplicates are ignored.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut s = Self::empty_relation(size);
        for &(x, y) in pairs {
            if x >= size || y >= size {
                return Err(Error::input(format!(
                    "pair ({x}, {y}) out of range for a structure of size {size}"
                )));
            }
            s.set(x, y);
        }
        Ok(s)
    }

    /// Builds a structure from a predicate evaluated on every ordered pair.
    pub fn from_fn(size: usize, mut rel: impl FnMut(usize, usize) -> bool) -> Self {
        let mut s = Self::empty_relation(size);
        for x in 0..size {
            for y in 0..size {
                if rel(x, y) {
                    s.set(x, y);
                }
            }
        }
        s
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.size && y < self.size);
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] |= 1 << (y % 64);
    }

    /// Bit row of `x`: bit `y` is set iff `x` is related to `y`.
    pub(crate) fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    pub(crate) fn bits_mut(&mut self) -> &mut [u64] {
        &mut self.bits
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    /// All related pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.related(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn pair_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Elements `y` with `x` related to `y`.
    pub fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&y| self.related(x, y))
    }

    /// Induced substructure on `elems`, renumbered in the given order.
    pub fn induced(&self, elems: &[usize]) -> FinStruct {
        FinStruct::from_fn(elems.len(), |i, j| self.related(elems[i], elems[j]))
    }

    /// The image of `self` under the bijection `perm` (element `x` becomes `perm[x]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<FinStruct> {
        check_bijection(perm, self.size)?;
        let mut out = FinStruct::empty_relation(self.size);
        for x in 0..self.size {
            for y in 0..self.size {
                if self.related(x, y) {
                    out.set(perm[x], perm[y]);
                }
            }
        }
        out.name = self.name.clone();
        Ok(out)
    }

    /// Row-major relation bits, one byte per entry. Used for comparisons that
    /// must not depend on the internal word layout.
    pub fn matrix_bits(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.size * self.size);
        for x in 0..self.size {
            for y in 0..self.size {
                out.push(self.related(x, y));
            }
        }
        out
    }
}

pub(crate) fn check_bijection(map: &[usize], size: usize) -> Result<()> {
    if map.len() != size {
        return Err(Error::input(format!(
            "map has length {} but the domain has size {size}",
            map.len()
        )));
    }
    let mut seen = vec![false; size];
    for &v in map {
        if v >= size || seen[v] {
            return Err(Error::input("map is not a bijection of the domain"));
        }
        seen[v] = true;
    }
    Ok(())
}

// Equality and hashing ignore the name: two structures are equal when they
// have the same domain and the same relation.
impl PartialEq for FinStruct {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.bits == other.bits
    }
}

impl Eq for FinStruct {}

impl Hash for FinStruct {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
        self.bits.hash(state);
    }
}

impl fmt::Debug for FinStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinStruct")
            .field("name", &self.name)
            .field("size", &self.size)
            .field("pairs", &self.pairs())
            .finish()
    }
}

/// A partition of `0..size` into nonempty blocks.
///
/// Blocks are kept sorted internally and ordered by their least element, so
/// two partitions with the same blocks compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    size: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; size];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::input("partition block is empty"));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x >= size {
                    return Err(Error::input(format!("partition index {x} out of range")));
                }
                if seen[x] {
                    return Err(Error::input(format!("index {x} occurs in two blocks")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::input(format!("index {missing} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { size, blocks })
    }

    /// The partition whose blocks are the classes of `class_of`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut by_label: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(x);
        }
        let mut blocks: Vec<Vec<usize>> = by_label.into_values().collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition {
            size: labels.len(),
            blocks,
        }
    }

    pub fn discrete(size: usize) -> Self {
        Partition {
            size,
            blocks: (0..size).map(|x| vec![x]).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every element.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.size];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                out[x] = b;
            }
        }
        out
    }
}
