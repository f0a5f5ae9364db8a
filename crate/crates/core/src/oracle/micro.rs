use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use crate::error::{Error, Result};
use crate::kset::{enumerate_lex, KSet};

use super::search::cap_table;

/// Largest side enumerated subset by subset.
pub const MICRO_ENUMERATION_SIDE: usize = 22;
/// Largest `C(n,k_1) + C(n,k_2)` handled by the matching method.
pub const MICRO_MATCHING_SIZE: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MicroMethod {
    /// Every subset of the smaller side, paired with its closure.
    Enumeration,
    /// `A_1 ∋ [k_1]`, `A_2 ∋ G_0` for each orbit of `G_0`, and a maximum
    /// independent set of the disjointness graph via König's theorem.
    Matching,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MicroResult {
    pub optimum: u64,
    pub method: MicroMethod,
    /// Distinct optimal `(|A_1|, |A_2|)`; enumeration only.
    pub witness_sizes: Vec<(u64, u64)>,
    /// Subsets of the enumerated side attaining the optimum.
    pub optimal_subsets: Option<u64>,
    /// Closed pairs whose L-initial replacements were tested.
    pub kk_checked: u64,
    /// Closed pairs whose L-initial replacements fail to cross-intersect.
    pub kk_violations: u64,
}

fn mask(s: &KSet) -> u64 {
    s.elements().iter().fold(0, |m, &x| m | 1 << (x - 1))
}

struct Enumerator<'a> {
    meet: &'a [u64],
    /// Caps from the enumerated side to the other and back.
    forward: &'a [u64],
    backward: &'a [u64],
    best: u64,
    optimal: u64,
    sizes: BTreeSet<(u64, u64)>,
    kk_checked: u64,
    kk_violations: u64,
}

impl Enumerator<'_> {
    fn dfs(&mut self, idx: usize, size: u64, closure: u64) {
        if closure == 0 {
            return;
        }
        if idx == self.meet.len() {
            if size == 0 {
                return;
            }
            let other = closure.count_ones() as u64;
            self.kk_checked += 1;
            if other > self.forward[size as usize] || size > self.backward[other as usize] {
                self.kk_violations += 1;
            }
            let value = size + other;
            if value > self.best {
                self.best = value;
                self.optimal = 0;
                self.sizes.clear();
            }
            if value == self.best {
                self.optimal += 1;
                self.sizes.insert((size, other));
            }
            return;
        }
        self.dfs(idx + 1, size, closure);
        self.dfs(idx + 1, size + 1, closure & self.meet[idx]);
    }
}

/// Optimum, optimal subset count, optimal size pairs, KK checks, KK violations.
type Enumerated = (u64, u64, BTreeSet<(u64, u64)>, u64, u64);

fn enumerate(n: usize, k_small: usize, k_other: usize) -> Result<Enumerated> {
    let xs: Vec<u64> = enumerate_lex(n, k_small).map(|s| mask(&s)).collect();
    let ys: Vec<u64> = enumerate_lex(n, k_other).map(|s| mask(&s)).collect();
    let meet: Vec<u64> = xs
        .iter()
        .map(|&x| {
            ys.iter()
                .enumerate()
                .filter(|&(_, &y)| x & y != 0)
                .fold(0u64, |m, (p, _)| m | 1 << p)
        })
        .collect();
    let forward = cap_table(n, k_small, k_other, xs.len() as u64)?;
    let backward = cap_table(n, k_other, k_small, ys.len() as u64)?;
    let mut e = Enumerator {
        meet: &meet,
        forward: &forward,
        backward: &backward,
        best: 0,
        optimal: 0,
        sizes: BTreeSet::new(),
        kk_checked: 0,
        kk_violations: 0,
    };
    let everything = if ys.len() == 64 { u64::MAX } else { (1u64 << ys.len()) - 1 };
    e.dfs(0, 0, everything);
    Ok((e.best, e.optimal, e.sizes, e.kk_checked, e.kk_violations))
}

fn by_matching(n: usize, k1: usize, k2: usize) -> u64 {
    let xs: Vec<u64> = enumerate_lex(n, k1).map(|s| mask(&s)).collect();
    let ys: Vec<u64> = enumerate_lex(n, k2).map(|s| mask(&s)).collect();
    let f0 = mask(&KSet::interval(n, 1, k1));
    let mut best = 0;
    for shared in 1..=k1.min(k2) {
        let mut e: Vec<usize> = (1..=shared).collect();
        e.extend(k1 + 1..=k1 + k2 - shared);
        let g0 = mask(&KSet::new(n, e).expect("k_1 + k_2 <= n"));
        let left: Vec<u64> = xs.iter().copied().filter(|&x| x & g0 != 0).collect();
        let right: Vec<u64> = ys.iter().copied().filter(|&y| y & f0 != 0).collect();
        let mut g = UnGraph::<(), ()>::with_capacity(left.len() + right.len(), 0);
        let ln: Vec<_> = left.iter().map(|_| g.add_node(())).collect();
        let rn: Vec<_> = right.iter().map(|_| g.add_node(())).collect();
        for (a, &x) in left.iter().enumerate() {
            for (b, &y) in right.iter().enumerate() {
                if x & y == 0 {
                    g.add_edge(ln[a], rn[b], ());
                }
            }
        }
        let nu = maximum_matching(&g).len();
        best = best.max((left.len() + right.len() - nu) as u64);
    }
    best
}

/// Maximum of `|A_1| + |A_2|` over all non-empty cross-intersecting
/// `A_1 ⊆ C([n], k_1)`, `A_2 ⊆ C([n], k_2)`, with no L-initial assumption.
///
/// For a fixed side, the other side may be taken to be every set meeting
/// all of it: enlarging it keeps the pair cross-intersecting.
pub fn micro_search_t2(n: usize, k1: usize, k2: usize) -> Result<MicroResult> {
    if n > 64 || k1 == 0 || k2 == 0 || k1 + k2 > n {
        return Err(Error::Regime { a: k1, b: k2, n });
    }
    let n1 = enumerate_lex(n, k1).count();
    let n2 = enumerate_lex(n, k2).count();
    let (small, other, flip) = if n1 <= n2 { (k1, k2, false) } else { (k2, k1, true) };
    if n1.min(n2) <= MICRO_ENUMERATION_SIDE && n1.max(n2) <= 64 {
        let (best, optimal, sizes, kk_checked, kk_violations) = enumerate(n, small, other)?;
        let witness_sizes = sizes
            .into_iter()
            .map(|(a, b)| if flip { (b, a) } else { (a, b) })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        return Ok(MicroResult {
            optimum: best,
            method: MicroMethod::Enumeration,
            witness_sizes,
            optimal_subsets: Some(optimal),
            kk_checked,
            kk_violations,
        });
    }
    if n1 + n2 <= MICRO_MATCHING_SIZE {
        return Ok(MicroResult {
            optimum: by_matching(n, k1, k2),
            method: MicroMethod::Matching,
            witness_sizes: Vec::new(),
            optimal_subsets: None,
            kk_checked: 0,
            kk_violations: 0,
        });
    }
    Err(Error::TooLarge(format!(
        "C({n},{k1}) + C({n},{k2}) = {} exceeds {MICRO_MATCHING_SIZE}",
        n1 + n2
    )))
}

/// The same maximum by testing every pair of families member by member.
/// Practical only for `n <= 5`.
pub fn literal_pair_optimum(n: usize, k1: usize, k2: usize) -> Result<u64> {
    let xs: Vec<u64> = enumerate_lex(n, k1).map(|s| mask(&s)).collect();
    let ys: Vec<u64> = enumerate_lex(n, k2).map(|s| mask(&s)).collect();
    if xs.len() > 16 || ys.len() > 16 {
        return Err(Error::TooLarge(format!("n = {n} is beyond literal enumeration")));
    }
    let mut best = 0;
    for a in 1u32..1 << xs.len() {
        for b in 1u32..1 << ys.len() {
            let size = (a.count_ones() + b.count_ones()) as u64;
            if size <= best {
                continue;
            }
            let ok = (0..xs.len()).filter(|p| a >> p & 1 == 1).all(|p| {
                (0..ys.len())
                    .filter(|q| b >> q & 1 == 1)
                    .all(|q| xs[p] & ys[q] != 0)
            });
            if ok {
                best = size;
            }
        }
    }
    Ok(best)
}
