use super::families::{posets, random_connected, random_struct, shuffled, trees};
use super::Tally;
use crate::classify::{
    classify, fmd_decompose, BaseDecl, Multiplicity, PartDecl, Rule, StructExpr, VcClass,
};
use crate::ef::ef_equiv;
use crate::error::{Error, Result};
use crate::iso::{
    chain_product_factors, equivalence_bijection, extract_linear_downset_part,
    linear_downset_elements, IsoBudget, IsoEngine, IsoWitness,
};
use crate::kernel::{
    antichain, chain, comparability, compatibility, components, direct_product, is_tree, lex_sum,
    point, product_of, rs_closure, rst_closure, strip_root, union_of, FinStruct, Partition,
};
use crate::oracle;
use crate::ordertype::{block_sizes, enum_c, pred, rank, realize, OtTerm};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Offsets of each part inside the disjoint union of `parts`.
fn offsets(parts: &[FinStruct]) -> Vec<usize> {
    parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.size();
            Some(o)
        })
        .collect()
}

fn wide_engine() -> IsoEngine {
    IsoEngine::new(IsoBudget::default().with_max_size(256))
}

fn random_union(rng: &mut ChaCha8Rng, connected: bool) -> Vec<FinStruct> {
    let m = rng.gen_range(1..=3);
    (0..m)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            if connected {
                random_connected(rng, n)
            } else {
                random_struct(rng, n, 0.4)
            }
        })
        .collect()
}

/// Product of two unions against the union of the pairwise products.
pub(super) fn distributivity(seed: u64, t: &mut Tally) -> Result<()> {
    let mut rng = rng_for(seed, 1);
    let engine = wide_engine();
    for case in 0..200 {
        let u0 = random_union(&mut rng, false);
        let u1 = random_union(&mut rng, false);
        let lhs = direct_product(&union_of(&u0), &union_of(&u1));
        let mut pieces = Vec::new();
        for x in &u0 {
            for y in &u1 {
                pieces.push(direct_product(x, y));
            }
        }
        let rhs = union_of(&pieces);
        let found = engine.find_iso(&lhs, &rhs)?;
        let found_ok = found.as_ref().is_some_and(|w| w.validates(&lhs, &rhs));
        // the explicit renumbering (x, y) ↦ block (j0, j1), offset x'·|X¹_{j1}| + y'
        let (o0, o1, op) = (offsets(&u0), offsets(&u1), offsets(&pieces));
        // parts are nonempty, so offsets strictly increase
        let locate = |offs: &[usize], x: usize| {
            let j = offs.partition_point(|&o| o <= x) - 1;
            (j, x - offs[j])
        };
        let n1 = union_of(&u1).size();
        let mut mapping = vec![0; lhs.size()];
        for x in 0..union_of(&u0).size() {
            for y in 0..n1 {
                let (j0, x1) = locate(&o0, x);
                let (j1, y1) = locate(&o1, y);
                let block = j0 * u1.len() + j1;
                mapping[x * n1 + y] = op[block] + x1 * u1[j1].size() + y1;
            }
        }
        let explicit_ok = IsoWitness { mapping }.validates(&lhs, &rhs);
        t.check(found_ok && explicit_ok, || {
            format!("case {case}: search={found_ok} explicit={explicit_ok}")
        });
    }
    Ok(())
}

/// Components of a product of unions of connected reflexive structures are
/// exactly the pairwise products.
pub(super) fn product_components(seed: u64, t: &mut Tally) -> Result<()> {
    let mut rng = rng_for(seed, 2);
    let engine = wide_engine();
    for case in 0..200 {
        let u0 = random_union(&mut rng, true);
        let u1 = random_union(&mut rng, true);
        let (a, b) = (union_of(&u0), union_of(&u1));
        let prod = direct_product(&a, &b);
        let comps = components(&prod);
        let (la, lb) = (
            components(&a).partition.labels(),
            components(&b).partition.labels(),
        );
        let expected: Vec<usize> = (0..prod.size())
            .map(|z| la[z / b.size()] * u1.len() + lb[z % b.size()])
            .collect();
        let partition_ok = comps.partition == Partition::from_labels(&expected);
        let mut iso_ok = comps.len() == u0.len() * u1.len();
        if iso_ok {
            for (k, block) in comps.partition.blocks().iter().enumerate() {
                let z = block[0];
                let (j0, j1) = (la[z / b.size()], lb[z % b.size()]);
                let piece = direct_product(&u0[j0], &u1[j1]);
                iso_ok &= engine.find_iso(&comps.parts[k], &piece)?.is_some();
            }
        }
        t.check(partition_ok && iso_ok, || {
            format!("case {case}: partition={partition_ok} iso={iso_ok}")
        });
    }
    Ok(())
}

/// On trees built as sums of chains and antichains over index trees,
/// comparability is the symmetric closure and compatibility the
/// equivalence closure.
pub(super) fn tree_identities(_seed: u64, t: &mut Tally) -> Result<()> {
    for n in 1..=4 {
        for index in trees(n, false)? {
            let maximal: Vec<bool> = (0..n)
                .map(|i| (0..n).all(|j| j == i || !index.related(i, j)))
                .collect();
            let options = |i: usize| {
                let mut o: Vec<FinStruct> = (1..=3).map(chain).collect();
                if maximal[i] {
                    o.extend((2..=3).map(antichain));
                }
                o
            };
            let choices: Vec<Vec<FinStruct>> = (0..n).map(options).collect();
            let mut pick = vec![0usize; n];
            loop {
                let parts: Vec<FinStruct> = (0..n).map(|i| choices[i][pick[i]].clone()).collect();
                let s = lex_sum(&index, &parts)?;
                let ok = is_tree(&s)
                    && comparability(&s)? == rs_closure(&s)
                    && compatibility(&s)? == rst_closure(&s)
                    && rst_closure(&s) == oracle::union_find_rst(&s);
                t.check(ok, || format!("index {:?} parts {:?}", index.pairs(), pick));
                let Some(i) = (0..n).find(|&i| pick[i] + 1 < choices[i].len()) else {
                    break;
                };
                pick[i] += 1;
                pick[..i].iter_mut().for_each(|p| *p = 0);
            }
        }
    }
    Ok(())
}

/// `(I, J, K, f, rho)` for one bijection extraction.
type BijectionInstance = (
    Vec<usize>,
    Vec<usize>,
    Vec<usize>,
    Vec<(usize, usize)>,
    Partition,
);

fn random_bijection_instance(rng: &mut ChaCha8Rng) -> BijectionInstance {
    let ni = rng.gen_range(0..=5);
    let nj = rng.gen_range(0..=(9 - ni) / 2);
    let total = ni + 2 * nj;
    let mut pts: Vec<usize> = (0..total).collect();
    pts.shuffle(rng);
    let i = pts[..ni].to_vec();
    let j = pts[ni..ni + nj].to_vec();
    let k = pts[ni + nj..].to_vec();
    let dom: Vec<usize> = i.iter().chain(&j).copied().collect();
    let mut cod: Vec<usize> = i.iter().chain(&k).copied().collect();
    cod.shuffle(rng);
    let f: Vec<(usize, usize)> = dom.into_iter().zip(cod).collect();
    // rho: the classes of f's closure, then some random merges
    let mut label: Vec<usize> = (0..total).collect();
    for _ in 0..total {
        for &(x, y) in &f {
            let m = label[x].min(label[y]);
            let (lx, ly) = (label[x], label[y]);
            label.iter_mut().for_each(|l| {
                if *l == lx || *l == ly {
                    *l = m;
                }
            });
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        if total >= 2 {
            let (a, b) = (rng.gen_range(0..total), rng.gen_range(0..total));
            let (la, lb) = (label[a], label[b]);
            label.iter_mut().for_each(|l| {
                if *l == lb {
                    *l = la;
                }
            });
        }
    }
    (i, j, k, f, Partition::from_labels(&label))
}

/// Cancellation of a finite family of connected parts, the bijection
/// extraction behind it, and its finite truncations of the shift.
pub(super) fn cancellation(seed: u64, t: &mut Tally) -> Result<()> {
    let mut rng = rng_for(seed, 4);
    let engine = IsoEngine::default();
    for case in 0..100 {
        let a_parts: Vec<FinStruct> = (0..rng.gen_range(0..=3))
            .map(|_| {
                let n = rng.gen_range(1..=4);
                random_connected(&mut rng, n)
            })
            .collect();
        let y = union_of(&random_union(&mut rng, true));
        let z = if rng.gen_bool(0.5) {
            shuffled(&mut rng, &y)
        } else {
            union_of(&random_union(&mut rng, true))
        };
        let mut lp = a_parts.clone();
        lp.push(y.clone());
        let mut rp = a_parts.clone();
        rp.push(z.clone());
        let (l, r) = (union_of(&lp), union_of(&rp));
        let direct = engine.find_iso(&y, &z)?.is_some();
        let ok = match engine.find_iso(&l, &r)? {
            Some(f) => {
                let w = engine.cancel_union(&a_parts, &y, &z, &f)?;
                w.validates(&y, &z) && direct
            }
            None => !direct,
        };
        t.check(ok, || format!("cancellation case {case}"));
    }
    for case in 0..100 {
        let (i, j, k, f, rho) = random_bijection_instance(&mut rng);
        let pi = equivalence_bijection(&i, &j, &k, &f, &rho)?;
        let class = rho.labels();
        let mut image: Vec<usize> = pi.iter().map(|&(_, b)| b).collect();
        image.sort_unstable();
        let mut ks = k.clone();
        ks.sort_unstable();
        let mut dom: Vec<usize> = pi.iter().map(|&(a, _)| a).collect();
        dom.sort_unstable();
        let mut js = j.clone();
        js.sort_unstable();
        let inside = pi.iter().all(|&(a, b)| class[a] == class[b]);
        let matching = oracle::max_matching(&j, &k, |a, b| class[a] == class[b]);
        t.check(
            inside && image == ks && dom == js && matching == j.len(),
            || format!("bijection case {case}: i={i:?} j={j:?} k={k:?} f={f:?}"),
        );
    }
    // the shift a ↦ 0, n ↦ n+1 on ω ∪ {a} onto ω has no finite analogue
    // failure: every truncation leaves a last point to absorb a
    for n in 1..=6 {
        let a = n + 1;
        let i: Vec<usize> = (0..n).collect();
        let mut f = vec![(a, 0)];
        f.extend((0..n).map(|x| (x, x + 1)));
        let rho = Partition::new(n + 2, vec![(0..n + 2).collect()])?;
        let pi = equivalence_bijection(&i, &[a], &[n], &f, &rho)?;
        t.check(pi == vec![(a, n)], || format!("shift truncation {n}"));
    }
    Ok(())
}

fn rooted_trees_upto(n: usize) -> Result<Vec<FinStruct>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(trees(k, true)?);
    }
    Ok(out)
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The elements with linearly ordered down-sets in a product of rooted
/// trees form the union of the trees without their roots.
pub(super) fn rooted_extraction(_seed: u64, t: &mut Tally) -> Result<()> {
    let rt = rooted_trees_upto(4)?;
    let engine = IsoEngine::default();
    for k in 2..=3 {
        for ms in multisets(rt.len(), k) {
            let factors: Vec<FinStruct> = ms.iter().map(|&i| rt[i].clone()).collect();
            let p = product_of(&factors);
            let got = extract_linear_downset_part(&p)?;
            let stripped = factors.iter().map(strip_root).collect::<Result<Vec<_>>>()?;
            let want = union_of(&stripped);
            t.check(engine.find_iso(&got, &want)?.is_some(), || {
                format!("factors {ms:?}")
            });
        }
    }
    Ok(())
}

/// `(∏X) × Y ≅ (∏X) × Z` implies `Y ≅ Z` for rooted trees, derived by
/// extracting the rootless parts and cancelling the common components.
pub(super) fn rooted_cancellation(_seed: u64, t: &mut Tally) -> Result<()> {
    let rt = rooted_trees_upto(4)?;
    let engine = IsoEngine::default();
    let mut xs: Vec<Vec<usize>> = multisets(rt.len(), 1);
    xs.extend(multisets(rt.len(), 2));
    for xm in &xs {
        let x_factors: Vec<FinStruct> = xm.iter().map(|&i| rt[i].clone()).collect();
        let x = product_of(&x_factors);
        let mut a_parts = Vec::new();
        for f in &x_factors {
            a_parts.extend(components(&strip_root(f)?).parts);
        }
        for (yi, y) in rt.iter().enumerate() {
            for (zi, z) in rt.iter().enumerate() {
                let p = direct_product(&x, y);
                let q = direct_product(&x, z);
                let direct = engine.find_iso(y, z)?.is_some();
                let ok = match engine.find_iso(&p, &q)? {
                    None => !direct,
                    Some(big) => {
                        let (kp, kq) = (linear_downset_elements(&p)?, linear_downset_elements(&q)?);
                        let g: Option<Vec<usize>> = kp
                            .iter()
                            .map(|&e| kq.binary_search(&big.mapping[e]).ok())
                            .collect();
                        let (yp, zp) = (strip_root(y)?, strip_root(z)?);
                        let mut lp = a_parts.clone();
                        lp.push(yp.clone());
                        let mut rp = a_parts.clone();
                        rp.push(zp.clone());
                        let (l, r) = (union_of(&lp), union_of(&rp));
                        let (ep, eq) = (p.induced(&kp), q.induced(&kq));
                        match (g, engine.find_iso(&l, &ep)?, engine.find_iso(&r, &eq)?) {
                            (Some(g), Some(hp), Some(hq)) => {
                                let hq_inv = hq.inverse();
                                let f = IsoWitness {
                                    mapping: hp
                                        .mapping
                                        .iter()
                                        .map(|&v| hq_inv.mapping[g[v]])
                                        .collect(),
                                };
                                let w = engine.cancel_union(&a_parts, &yp, &zp, &f)?;
                                w.validates(&yp, &zp) && direct
                            }
                            _ => false,
                        }
                    }
                };
                t.check(ok, || format!("x {xm:?} y {yi} z {zi}"));
            }
        }
    }
    Ok(())
}

fn chain_multisets(limit: usize) -> Vec<Vec<usize>> {
    fn go(min: usize, prod: usize, limit: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for d in min..=limit / prod {
            cur.push(d);
            go(d, prod * d, limit, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(2, 1, limit, &mut Vec::new(), &mut out);
    out.retain(|m| !m.is_empty());
    out
}

/// Products of finite chains determine their factor multisets.
pub(super) fn chain_factorization(_seed: u64, t: &mut Tally) -> Result<()> {
    let all = chain_multisets(36);
    let grids: Vec<FinStruct> = all
        .iter()
        .map(|m| product_of(&m.iter().map(|&n| chain(n)).collect::<Vec<_>>()))
        .collect();
    let engine = IsoEngine::default();
    for (m, g) in all.iter().zip(&grids) {
        let got = chain_product_factors(g)?;
        t.check(got.as_ref() == Some(m), || {
            format!("{m:?} recovered as {got:?}")
        });
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if grids[i].size() != grids[j].size() {
                continue;
            }
            let iso = engine.find_iso(&grids[i], &grids[j])?.is_some();
            t.check(!iso, || format!("{:?} ≅ {:?}", all[i], all[j]));
        }
    }
    Ok(())
}

fn ef_pool() -> Result<Vec<FinStruct>> {
    let mut pool = Vec::new();
    for n in 1..=4 {
        pool.extend(posets(n)?);
    }
    // irreflexive sets, so loops matter too
    pool.extend((1..=4).map(FinStruct::empty_relation));
    Ok(pool)
}

/// Game equivalence: the chain threshold, equivalence and refinement
/// laws, and congruence for lexicographic sums and products.
pub(super) fn ef(seed: u64, t: &mut Tally) -> Result<()> {
    for n in 0..=3u32 {
        for m in 1..=10 {
            for k in 1..=10 {
                let got = ef_equiv(&chain(m), &chain(k), n as usize)?;
                t.check(got == oracle::chain_threshold(m, k, n), || {
                    format!("chains {m} and {k} at rank {n}: {got}")
                });
            }
        }
    }
    let pool = ef_pool()?;
    let p = pool.len();
    let mut eq = Vec::new();
    for n in 0..=3 {
        let mut e = vec![vec![false; p]; p];
        for i in 0..p {
            for j in i..p {
                let v = ef_equiv(&pool[i], &pool[j], n)?;
                e[i][j] = v;
                e[j][i] = v;
            }
        }
        eq.push(e);
    }
    for n in 0..=3 {
        let e = &eq[n];
        for i in 0..p {
            t.check(e[i][i], || {
                format!("rank {n}: structure {i} not equivalent to itself")
            });
            for j in 0..p {
                for k in 0..p {
                    if e[i][j] && e[j][k] {
                        t.check(e[i][k], || format!("rank {n}: {i}~{j}~{k} not transitive"));
                    }
                }
                if n > 0 && eq[n][i][j] {
                    t.check(eq[n - 1][i][j], || {
                        format!("rank {n} does not refine rank {}", n - 1)
                    });
                }
            }
        }
    }
    let relabel_check = |rng: &mut ChaCha8Rng, t: &mut Tally| -> Result<()> {
        let s = &pool[rng.gen_range(0..p)];
        let r = shuffled(rng, s);
        t.check(ef_equiv(s, &r, 3)?, || {
            format!("relabelled {:?}", s.pairs())
        });
        Ok(())
    };
    let mut rng = rng_for(seed, 8);
    for _ in 0..20 {
        relabel_check(&mut rng, t)?;
    }
    let pairs_at = |n: usize| -> Vec<(usize, usize)> {
        (0..p)
            .flat_map(|i| (0..p).map(move |j| (i, j)))
            .filter(|&(i, j)| eq[n][i][j])
            .collect()
    };
    for n in 1..=3 {
        let pairs = pairs_at(n);
        let mut done = 0;
        while done < 20 {
            let size = rng.gen_range(1..=3);
            let index = random_struct(&mut rng, size, 0.5);
            let chosen: Vec<(usize, usize)> = (0..size)
                .map(|_| *pairs.choose(&mut rng).unwrap())
                .collect();
            let xs: Vec<FinStruct> = chosen.iter().map(|&(i, _)| pool[i].clone()).collect();
            let ys: Vec<FinStruct> = chosen.iter().map(|&(_, j)| pool[j].clone()).collect();
            let (sx, sy) = (lex_sum(&index, &xs)?, lex_sum(&index, &ys)?);
            if sx.size() > 8 || sy.size() > 8 {
                continue;
            }
            done += 1;
            t.check(ef_equiv(&sx, &sy, n)?, || {
                format!("lex sum over {:?} of {chosen:?} at rank {n}", index.pairs())
            });
        }
        let mut done = 0;
        while done < 20 {
            let (a0, b0) = *pairs.choose(&mut rng).unwrap();
            let (a1, b1) = *pairs.choose(&mut rng).unwrap();
            let (x, y) = (
                direct_product(&pool[a0], &pool[a1]),
                direct_product(&pool[b0], &pool[b1]),
            );
            if x.size() > 8 || y.size() > 8 {
                continue;
            }
            done += 1;
            t.check(ef_equiv(&x, &y, n)?, || {
                format!("products of {a0},{a1} and {b0},{b1} at rank {n}")
            });
        }
    }
    Ok(())
}

/// Level structure, rank and predecessor coherence, worked examples,
/// jumps against the skeleton oracle, and realisation invariants.
pub(super) fn class_c(seed: u64, t: &mut Tally) -> Result<()> {
    let levels: Vec<_> = (0..=3).map(enum_c).collect::<Result<Vec<_>>>()?;
    for n in 0..=3 {
        t.check(levels[n].iter().all(|x| rank(x) <= n), || {
            format!("level {n} has a term of higher rank")
        });
        t.check(levels[n].iter().any(|x| rank(x) == n), || {
            format!("level {n} has no term of rank {n}")
        });
        if n < 3 {
            t.check(levels[n].is_subset(&levels[n + 1]), || {
                format!("level {n} not inside level {}", n + 1)
            });
        }
    }
    t.check(levels[1].len() == 3, || {
        format!("level 1 has {} terms", levels[1].len())
    });
    for x in &levels[2] {
        let px = pred(x);
        let ok = px
            .iter()
            .all(|s| rank(s) < rank(x) && pred(s).is_subset(&px));
        t.check(ok, || format!("pred coherence fails at {x}"));
    }
    let one = OtTerm::one();
    let two = OtTerm::finite(2).unwrap();
    t.check(pred(&one).is_empty(), || "pred(1) is not empty".into());
    t.check(rank(&one) == 0, || "rank(1) != 0".into());
    t.check(rank(&two) == 1, || "rank(1+1) != 1".into());
    t.check(rank(&OtTerm::shuffle([two.clone()])) == 2, || {
        "rank(σ{1+1}) != 2".into()
    });
    t.check(pred(&two) == [one.clone()].into(), || {
        "pred(1+1) != {1}".into()
    });
    t.check(pred(&OtTerm::eta()) == [one.clone()].into(), || {
        "pred(σ{1}) != {1}".into()
    });
    for x in &levels[2] {
        let fast = block_sizes(x);
        let slow = oracle::jump_sizes_by_expansion(x);
        for k in 0..=3 {
            t.check(fast.contains(&(k + 1)) == slow.contains(&(k + 1)), || {
                format!("{k}-jump in {x}")
            });
        }
    }
    let mut rng = rng_for(seed, 9);
    for x in &levels[2] {
        let budget = rng.gen_range(1..=6);
        let (s1, s2) = (rng.gen(), rng.gen());
        let a = realize(x, budget, s1)?;
        let b = realize(x, budget, s1)?;
        let c = realize(x, budget, s2)?;
        t.check(a == b, || format!("realize not deterministic for {x}"));
        t.check(
            a.order.size() == c.order.size() && a.adjacency.len() + 1 == a.order.size(),
            || format!("realize size depends on the seed for {x}"),
        );
        if let crate::ordertype::Node::Shuffle(_) = x.node() {
            // adjacency inside a slot is allowed; between slots it is not
            let slots_dense = realize(&OtTerm::eta(), budget, s1)?
                .adjacency
                .iter()
                .all(|&v| !v);
            t.check(slots_dense, || format!("shuffle slots adjacent for {x}"));
        }
    }
    Ok(())
}

/// Every poset of size at most 6 decomposes into a partition that passes
/// the definition oracle and admits no coarser passing partition.
pub(super) fn fmd(_seed: u64, t: &mut Tally) -> Result<()> {
    for n in 0..=6 {
        for p in posets(n)? {
            let d = fmd_decompose(&p)?;
            let labels = d.partition.labels();
            let k = d.partition.len();
            let valid = oracle::is_monomorphic_decomposition(&p, &labels);
            let mut minimal = true;
            for merge in oracle::set_partitions(k) {
                let blocks = merge.iter().max().map_or(0, |m| m + 1);
                if blocks == k {
                    continue;
                }
                let coarser: Vec<usize> = labels.iter().map(|&l| merge[l]).collect();
                if oracle::is_monomorphic_decomposition(&p, &coarser) {
                    minimal = false;
                    break;
                }
            }
            t.check(valid && minimal, || {
                format!("poset {:?}: valid={valid} minimal={minimal}", p.pairs())
            });
        }
    }
    let v = lex_sum(&chain(2), &[point(), antichain(2)])?;
    let d = fmd_decompose(&v)?;
    t.check(
        d.partition.blocks() == [vec![0], vec![1, 2]]
            && d.quotient == chain(2)
            && d.shapes == vec![PartDecl::chain(1), PartDecl::antichain(2)],
        || format!("V poset: {d:?}"),
    );
    let d = fmd_decompose(&chain(5))?;
    t.check(
        d.partition.len() == 1 && d.shapes == vec![PartDecl::chain(5)],
        || format!("chain: {d:?}"),
    );
    let n =
        crate::kernel::make_struct(4, &[(0, 0), (1, 1), (2, 2), (3, 3), (0, 2), (1, 2), (1, 3)])?;
    let d = fmd_decompose(&n)?;
    t.check(d.partition.len() == 4, || format!("N poset: {d:?}"));
    Ok(())
}

/// Classifications stated explicitly in the literature.
pub(super) fn classifier_golden(_seed: u64, t: &mut Tally) -> Result<()> {
    let eta = || StructExpr::base(BaseDecl::linear("eta", OtTerm::eta()));
    let expect =
        |t: &mut Tally, name: &str, e: &StructExpr, class: VcClass, rules: &[Rule]| match classify(
            e,
        ) {
            Ok(c) => {
                let last = c.trace.last().map(|s| s.rule);
                t.check(
                    c.class == class && last.is_some_and(|r| rules.contains(&r)),
                    || format!("{name}: got {} via {last:?}", c.class),
                )
            }
            Err(err) => t.check(false, || format!("{name}: {err}")),
        };
    expect(
        t,
        "union of all finite chains",
        &StructExpr::all_finite_chains(),
        VcClass::Continuum,
        &[Rule::R2],
    );
    expect(
        t,
        "countably many rationals",
        &StructExpr::union_omega(vec![eta()]),
        VcClass::One,
        &[Rule::R2],
    );
    let fan = BaseDecl::rooted_fmd(
        "fan",
        chain(2),
        vec![PartDecl::chain(1), PartDecl::antichain_omega()],
    );
    expect(
        t,
        "ω-branching fan of height 2",
        &StructExpr::base(fan),
        VcClass::One,
        &[Rule::R1, Rule::R5, Rule::R6],
    );
    expect(
        t,
        "finite chain",
        &StructExpr::base(BaseDecl::finite("c3", chain(3))),
        VcClass::Zero,
        &[Rule::R0],
    );
    let wild = BaseDecl::declared_linear("wild", VcClass::Continuum).with_finite_diameter(true);
    let e = StructExpr::union(vec![StructExpr::base(wild), eta()]);
    expect(
        t,
        "union with a wild linear order",
        &e,
        VcClass::Continuum,
        &[Rule::R4],
    );
    expect(
        t,
        "product of rationals",
        &StructExpr::product(vec![eta(), eta()]),
        VcClass::One,
        &[Rule::R1],
    );
    let bad = BaseDecl::rooted_fmd(
        "bad",
        chain(2),
        vec![PartDecl::antichain(2), PartDecl::chain(1)],
    );
    let got = classify(&StructExpr::base(bad));
    t.check(
        matches!(&got, Err(Error::Validation { clause, .. }) if clause == "fmd-rooted"),
        || format!("antichain root: {got:?}"),
    );
    let finite_omega = StructExpr::UnionOmega {
        components: vec![crate::classify::OmegaComponent {
            expr: eta(),
            multiplicity: Multiplicity::Finite(2),
        }],
        schema: None,
    };
    t.check(classify(&finite_omega).is_err(), || {
        "finite countable union accepted".into()
    });
    Ok(())
}
