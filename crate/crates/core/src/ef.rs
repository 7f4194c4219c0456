//! Ehrenfeucht–Fraïssé games between finite structures.

use crate::error::{Error, Result};
use crate::kernel::FinStruct;
use std::collections::HashMap;

/// Size and round limits for exhaustive game search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EfBudget {
    pub max_size: usize,
    pub max_rounds: usize,
}

impl Default for EfBudget {
    fn default() -> Self {
        EfBudget {
            max_size: 12,
            max_rounds: 4,
        }
    }
}

/// A game position: rounds still to play and the pairs chosen so far.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EfConfig {
    pub rounds: usize,
    pub position: Vec<(usize, usize)>,
}

struct Game<'a> {
    a: &'a FinStruct,
    b: &'a FinStruct,
    memo: HashMap<(Vec<(u8, u8)>, usize), bool>,
}

impl Game<'_> {
    /// Can `(x, y)` be added to `pos` keeping it a partial isomorphism?
    fn extends(&self, pos: &[(u8, u8)], x: usize, y: usize) -> bool {
        if self.a.related(x, x) != self.b.related(y, y) {
            return false;
        }
        pos.iter().all(|&(p, q)| {
            let (p, q) = (p as usize, q as usize);
            (p == x) == (q == y)
                && self.a.related(x, p) == self.b.related(y, q)
                && self.a.related(p, x) == self.b.related(q, y)
        })
    }

    fn duplicator_wins(&mut self, pos: Vec<(u8, u8)>, rounds: usize) -> bool {
        if rounds == 0 {
            return true;
        }
        let key = (pos, rounds);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let pos = key.0.clone();
        let mut wins = true;
        'spoiler: for side in 0..2 {
            let (here, there) = if side == 0 {
                (self.a.size(), self.b.size())
            } else {
                (self.b.size(), self.a.size())
            };
            for u in 0..here {
                let mut answered = false;
                for v in 0..there {
                    let (x, y) = if side == 0 { (u, v) } else { (v, u) };
                    if !self.extends(&pos, x, y) {
                        continue;
                    }
                    let mut next = pos.clone();
                    next.push((x as u8, y as u8));
                    next.sort_unstable();
                    next.dedup();
                    if self.duplicator_wins(next, rounds - 1) {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    wins = false;
                    break 'spoiler;
                }
            }
        }
        self.memo.insert(key, wins);
        wins
    }
}

fn check(budget: &EfBudget, a: &FinStruct, b: &FinStruct, rounds: usize) -> Result<()> {
    if a.size() > budget.max_size || b.size() > budget.max_size {
        return Err(Error::resource(format!(
            "game search is limited to structures of size {}",
            budget.max_size
        )));
    }
    if rounds > budget.max_rounds {
        return Err(Error::resource(format!(
            "game search is limited to {} rounds",
            budget.max_rounds
        )));
    }
    Ok(())
}

/// Does Duplicator win from `config`? The starting position itself must be
/// a partial isomorphism.
pub fn duplicator_wins(
    budget: &EfBudget,
    a: &FinStruct,
    b: &FinStruct,
    config: &EfConfig,
) -> Result<bool> {
    check(budget, a, b, config.rounds)?;
    if config
        .position
        .iter()
        .any(|&(x, y)| x >= a.size() || y >= b.size())
    {
        return Err(Error::input(
            "position refers to an element outside the structures",
        ));
    }
    let mut game = Game {
        a,
        b,
        memo: HashMap::new(),
    };
    let mut pos: Vec<(u8, u8)> = Vec::new();
    for &(x, y) in &config.position {
        if !game.extends(&pos, x, y) {
            return Ok(false);
        }
        pos.push((x as u8, y as u8));
    }
    pos.sort_unstable();
    pos.dedup();
    Ok(game.duplicator_wins(pos, config.rounds))
}

/// `a ≡ₙ b`: Duplicator wins the `n`-round game from the empty position.
pub fn ef_equiv(a: &FinStruct, b: &FinStruct, n: usize) -> Result<bool> {
    ef_equiv_with(&EfBudget::default(), a, b, n)
}

pub fn ef_equiv_with(budget: &EfBudget, a: &FinStruct, b: &FinStruct, n: usize) -> Result<bool> {
    // isomorphic structures agree at every rank, so no game is needed
    check(budget, a, b, 0)?;
    if crate::iso::is_isomorphic(a, b)? {
        return Ok(true);
    }
    duplicator_wins(
        budget,
        a,
        b,
        &EfConfig {
            rounds: n,
            position: Vec::new(),
        },
    )
}

/// Least `n ≤ max_n` such that Spoiler wins the `n`-round game.
pub fn ef_rank_distinguish(a: &FinStruct, b: &FinStruct, max_n: usize) -> Result<Option<usize>> {
    ef_rank_distinguish_with(&EfBudget::default(), a, b, max_n)
}

pub fn ef_rank_distinguish_with(
    budget: &EfBudget,
    a: &FinStruct,
    b: &FinStruct,
    max_n: usize,
) -> Result<Option<usize>> {
    check(budget, a, b, 0)?;
    if crate::iso::is_isomorphic(a, b)? {
        return Ok(None);
    }
    check(budget, a, b, max_n)?;
    for n in 0..=max_n {
        if !ef_equiv_with(budget, a, b, n)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
