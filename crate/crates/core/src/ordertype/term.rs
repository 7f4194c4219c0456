use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::sync::Arc;

/// A term of the class generated from 1 by finite sums and shuffles.
///
/// Terms are kept normalised: sums are flattened (no sum directly inside a
/// sum, at least two summands) and shuffle members are sorted and
/// deduplicated. Two terms compare equal iff their normal forms agree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OtTerm(Arc<Node>);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    One,
    /// Summands in order, never a sum themselves, at least two of them.
    Sum(Vec<OtTerm>),
    /// Sorted, deduplicated, nonempty.
    Shuffle(Vec<OtTerm>),
}

impl OtTerm {
    pub fn one() -> Self {
        OtTerm(Arc::new(Node::One))
    }

    pub fn node(&self) -> &Node {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        matches!(*self.0, Node::One)
    }

    /// `a + b`.
    pub fn sum(a: &OtTerm, b: &OtTerm) -> Self {
        OtTerm::sum_all([a.clone(), b.clone()]).expect("two summands")
    }

    /// The sum of the given terms in order; `None` for an empty list.
    pub fn sum_all(parts: impl IntoIterator<Item = OtTerm>) -> Option<Self> {
        let mut flat = Vec::new();
        for p in parts {
            match p.node() {
                Node::Sum(inner) => flat.extend(inner.iter().cloned()),
                _ => flat.push(p),
            }
        }
        match flat.len() {
            0 => None,
            1 => flat.pop(),
            _ => Some(OtTerm(Arc::new(Node::Sum(flat)))),
        }
    }

    /// The shuffle of a nonempty set of terms.
    pub fn try_shuffle(members: impl IntoIterator<Item = OtTerm>) -> Result<Self> {
        let mut m: Vec<OtTerm> = members.into_iter().collect();
        if m.is_empty() {
            return Err(Error::input("a shuffle needs at least one member"));
        }
        m.sort();
        m.dedup();
        Ok(OtTerm(Arc::new(Node::Shuffle(m))))
    }

    /// Like [`OtTerm::try_shuffle`].
    ///
    /// # Panics
    /// If `members` is empty.
    pub fn shuffle(members: impl IntoIterator<Item = OtTerm>) -> Self {
        OtTerm::try_shuffle(members).expect("nonempty shuffle")
    }

    /// The finite chain `n = 1 + … + 1`, `None` for `n = 0`.
    pub fn finite(n: usize) -> Option<Self> {
        OtTerm::sum_all(std::iter::repeat_with(OtTerm::one).take(n))
    }

    /// The rationals, `σ({1})`.
    pub fn eta() -> Self {
        OtTerm::shuffle([OtTerm::one()])
    }

    /// Length of the denoted order if it is finite.
    pub fn finite_length(&self) -> Option<usize> {
        match self.node() {
            Node::One => Some(1),
            Node::Sum(parts) => parts.iter().map(OtTerm::finite_length).sum(),
            Node::Shuffle(_) => None,
        }
    }

    /// Does the denoted order have a least element?
    pub fn has_min(&self) -> bool {
        match self.node() {
            Node::One => true,
            Node::Sum(parts) => parts[0].has_min(),
            Node::Shuffle(_) => false,
        }
    }

    /// Does the denoted order have a greatest element?
    pub fn has_max(&self) -> bool {
        match self.node() {
            Node::One => true,
            Node::Sum(parts) => parts[parts.len() - 1].has_max(),
            Node::Shuffle(_) => false,
        }
    }
}

impl fmt::Display for OtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.node() {
            Node::One => write!(f, "1"),
            Node::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Node::Shuffle(members) => {
                write!(f, "σ{{")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

impl fmt::Debug for OtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OtTerm({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
enum Wire {
    One,
    Sum { args: Vec<OtTerm> },
    Shuffle { args: Vec<OtTerm> },
}

impl Serialize for OtTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = match self.node() {
            Node::One => Wire::One,
            Node::Sum(parts) => Wire::Sum {
                args: parts.clone(),
            },
            Node::Shuffle(m) => Wire::Shuffle { args: m.clone() },
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OtTerm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match Wire::deserialize(d)? {
            Wire::One => Ok(OtTerm::one()),
            Wire::Sum { args } => OtTerm::sum_all(args)
                .ok_or_else(|| D::Error::custom("a sum needs at least one argument")),
            Wire::Shuffle { args } => OtTerm::try_shuffle(args).map_err(D::Error::custom),
        }
    }
}
