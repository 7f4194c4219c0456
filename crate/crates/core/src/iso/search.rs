//! Individualisation–refinement search tree shared by isomorphism testing,
//! automorphism enumeration and canonical forms.

use super::refine::{individualize, refine, target_cell};
use super::{IsoBudget, IsoWitness};
use crate::error::{Error, Result};
use crate::kernel::FinStruct;

/// The leftmost root-to-leaf path of a structure's search tree.
struct Path {
    traces: Vec<u64>,
    cells: Vec<(u32, usize)>,
    pos: Vec<usize>,
    image: FinStruct,
}

fn positions(colors: &[u32]) -> Vec<usize> {
    colors.iter().map(|&c| c as usize).collect()
}

fn inverse(pos: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; pos.len()];
    for (x, &p) in pos.iter().enumerate() {
        inv[p] = x;
    }
    inv
}

fn image(s: &FinStruct, pos: &[usize]) -> FinStruct {
    // pos is a bijection by construction
    s.relabel(pos).expect("leaf colouring is a bijection")
}

fn cell_key(colors: &[u32], cell: &[usize]) -> (u32, usize) {
    (colors[cell[0]], cell.len())
}

fn first_path(s: &FinStruct) -> Path {
    let mut colors = vec![0u32; s.size()];
    let mut traces = vec![refine(s, &mut colors)];
    let mut cells = Vec::new();
    while let Some(cell) = target_cell(&colors) {
        cells.push(cell_key(&colors, &cell));
        individualize(&mut colors, cell[0]);
        traces.push(refine(s, &mut colors));
    }
    let pos = positions(&colors);
    let image = image(s, &pos);
    Path {
        traces,
        cells,
        pos,
        image,
    }
}

struct Walker<'a> {
    s: &'a FinStruct,
    path: &'a Path,
    budget: &'a IsoBudget,
    nodes: usize,
}

impl Walker<'_> {
    /// Visits every leaf whose trace sequence and image match `path`.
    /// `on_leaf` returns true to stop the walk.
    fn walk(
        &mut self,
        colors: Vec<u32>,
        depth: usize,
        on_leaf: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::resource(format!(
                "search tree exceeded {} nodes",
                self.budget.max_nodes
            )));
        }
        match target_cell(&colors) {
            None => {
                if depth + 1 != self.path.traces.len() {
                    return Ok(false);
                }
                let pos = positions(&colors);
                if image(self.s, &pos) == self.path.image {
                    return on_leaf(&pos);
                }
                Ok(false)
            }
            Some(cell) => {
                if depth >= self.path.cells.len()
                    || cell_key(&colors, &cell) != self.path.cells[depth]
                {
                    return Ok(false);
                }
                for &w in &cell {
                    let mut child = colors.clone();
                    individualize(&mut child, w);
                    if refine(self.s, &mut child) != self.path.traces[depth + 1] {
                        continue;
                    }
                    if self.walk(child, depth + 1, on_leaf)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
        }
    }

    fn start(&mut self, on_leaf: &mut dyn FnMut(&[usize]) -> Result<bool>) -> Result<bool> {
        let mut colors = vec![0u32; self.s.size()];
        if refine(self.s, &mut colors) != self.path.traces[0] {
            return Ok(false);
        }
        self.walk(colors, 0, on_leaf)
    }
}

fn check_size(budget: &IsoBudget, a: &FinStruct) -> Result<()> {
    if a.size() > budget.max_size {
        return Err(Error::resource(format!(
            "structure of size {} exceeds the isomorphism budget of {}",
            a.size(),
            budget.max_size
        )));
    }
    Ok(())
}

pub(crate) fn find_iso(
    budget: &IsoBudget,
    a: &FinStruct,
    b: &FinStruct,
) -> Result<Option<IsoWitness>> {
    check_size(budget, a)?;
    check_size(budget, b)?;
    if a.size() != b.size() || a.pair_count() != b.pair_count() {
        return Ok(None);
    }
    let path = first_path(a);
    let mut found = None;
    let mut walker = Walker {
        s: b,
        path: &path,
        budget,
        nodes: 0,
    };
    walker.start(&mut |pos_b| {
        let inv_b = inverse(pos_b);
        found = Some(path.pos.iter().map(|&p| inv_b[p]).collect());
        Ok(true)
    })?;
    Ok(found.map(|mapping| IsoWitness { mapping }))
}

pub(crate) fn automorphisms(budget: &IsoBudget, a: &FinStruct) -> Result<Vec<Vec<usize>>> {
    check_size(budget, a)?;
    let path = first_path(a);
    let inv_first = inverse(&path.pos);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let cap = budget.max_automorphisms;
    let mut walker = Walker {
        s: a,
        path: &path,
        budget,
        nodes: 0,
    };
    walker.start(&mut |pos| {
        // x sits where g(x) sits in the first leaf
        out.push(pos.iter().map(|&p| inv_first[p]).collect());
        if out.len() > cap {
            return Err(Error::resource(format!("more than {cap} automorphisms")));
        }
        Ok(false)
    })?;
    out.sort();
    Ok(out)
}

struct Leaf {
    traces: Vec<u64>,
    image: FinStruct,
    pos: Vec<usize>,
}

struct Canon<'a> {
    s: &'a FinStruct,
    budget: &'a IsoBudget,
    nodes: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    auts: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn leaf_key<'b>(traces: &'b [u64], image: &'b FinStruct) -> (&'b [u64], Vec<u64>) {
        (traces, packed(image))
    }

    fn visit(
        &mut self,
        colors: Vec<u32>,
        traces: &mut Vec<u64>,
        prefix: &mut Vec<usize>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::resource(format!(
                "canonical search exceeded {} nodes",
                self.budget.max_nodes
            )));
        }
        if let Some(best) = &self.best {
            let m = traces.len().min(best.traces.len());
            if traces[..m] > best.traces[..m] {
                return Ok(());
            }
        }
        let Some(cell) = target_cell(&colors) else {
            self.at_leaf(positions(&colors), traces.clone());
            return Ok(());
        };
        let mut explored: Vec<usize> = Vec::new();
        for &w in &cell {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, w) {
                continue;
            }
            explored.push(w);
            let mut child = colors.clone();
            individualize(&mut child, w);
            traces.push(refine(self.s, &mut child));
            prefix.push(w);
            self.visit(child, traces, prefix)?;
            prefix.pop();
            traces.pop();
        }
        Ok(())
    }

    fn at_leaf(&mut self, pos: Vec<usize>, traces: Vec<u64>) {
        let img = image(self.s, &pos);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.traces == traces && known.image == img {
                let inv = inverse(&known.pos);
                let g: Vec<usize> = pos.iter().map(|&p| inv[p]).collect();
                if g.iter().enumerate().any(|(x, &y)| x != y) {
                    self.auts.push(g);
                }
                return;
            }
        }
        let leaf = Leaf {
            traces,
            image: img,
            pos,
        };
        let better = match &self.best {
            None => true,
            Some(best) => {
                Self::leaf_key(&leaf.traces, &leaf.image)
                    < Self::leaf_key(&best.traces, &best.image)
            }
        };
        if self.first.is_none() {
            self.first = Some(Leaf {
                traces: leaf.traces.clone(),
                image: leaf.image.clone(),
                pos: leaf.pos.clone(),
            });
        }
        if better {
            self.best = Some(leaf);
        }
    }

    /// Is `w` in the orbit of an explored sibling under the automorphisms
    /// found so far that fix the current prefix pointwise?
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let n = self.s.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.auts {
            if prefix.iter().any(|&v| g[v] != v) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, g[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&u| find(&mut parent, u) == rw)
    }
}

/// Row-major relation bits packed into words, most significant first.
fn packed(s: &FinStruct) -> Vec<u64> {
    let bits = s.matrix_bits();
    bits.chunks(64)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &b)| acc | (b as u64) << (63 - i))
        })
        .collect()
}

pub(crate) fn canonical_form(budget: &IsoBudget, a: &FinStruct) -> Result<Vec<u8>> {
    check_size(budget, a)?;
    let mut canon = Canon {
        s: a,
        budget,
        nodes: 0,
        first: None,
        best: None,
        auts: Vec::new(),
    };
    let mut colors = vec![0u32; a.size()];
    let mut traces = vec![refine(a, &mut colors)];
    canon.visit(colors, &mut traces, &mut Vec::new())?;
    let mut out = (a.size() as u32).to_be_bytes().to_vec();
    if let Some(best) = canon.best {
        let bits = best.image.matrix_bits();
        for chunk in bits.chunks(8) {
            out.push(
                chunk
                    .iter()
                    .enumerate()
                    .fold(0u8, |acc, (i, &b)| acc | (b as u8) << (7 - i)),
            );
        }
    }
    Ok(out)
}
