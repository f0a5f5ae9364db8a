use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::binom::{binomial, to_u64, Natural};
use crate::error::{Error, Result};
use crate::extremal::{id_of_size, match_sizes, CaseLabel};
use crate::instance::ProblemInstance;
use crate::kset::lex_unrank;
use crate::linitial::{max_cross_size, normalize_id, FamilyId};

/// Largest `Π_j C(n, k_j)` searched without an explicit budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum: Natural,
    /// Every maximizing size vector `(|A_1|, ..., |A_t|)`, ascending.
    pub witnesses: Vec<Vec<Natural>>,
    pub ids: Vec<Vec<FamilyId>>,
    /// Case labels matched by each witness.
    pub witness_cases: Vec<Vec<CaseLabel>>,
    /// Union of `witness_cases`.
    pub matched_case: Vec<CaseLabel>,
    /// All maximizers are listed.
    pub complete: bool,
    /// Search nodes visited.
    pub nodes: u64,
}

/// `|A_j| <= |max partner of A_i|` for every ordered pair, all families
/// L-initial of the given sizes.
pub fn pairwise_threshold_feasible(sizes: &[Natural], inst: &ProblemInstance) -> Result<bool> {
    if sizes.len() != inst.t() {
        return Err(Error::InvalidInstance("one size per family required".into()));
    }
    let n = inst.n();
    let mut ids = Vec::with_capacity(sizes.len());
    for (j, s) in sizes.iter().enumerate() {
        let k = inst.k(j + 1);
        if *s == Natural::from(0u32) || *s > binomial(n as i64, k as i64) {
            return Err(Error::SizeOutOfRange { index: j + 1 });
        }
        ids.push(normalize_id(&lex_unrank(s, n, k)?, k)?);
    }
    for a in 0..sizes.len() {
        for b in 0..sizes.len() {
            if a != b && sizes[b] > max_cross_size(&ids[a], inst.k(b + 1)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Tables {
    /// `cap[a][b][s]`: largest L-initial `k_b` family cross-intersecting the
    /// first `s` sets of family `a` (`s >= 1`; index 0 unused).
    cap: Vec<Vec<Vec<u64>>>,
    /// `reach[a][b][s]`: largest `s_b` whose partner cap towards `a` is at
    /// least `s` (0 if none).
    reach: Vec<Vec<Vec<u64>>>,
    full: Vec<u64>,
}

pub(crate) fn cap_table(n: usize, ka: usize, kb: usize, full: u64) -> Result<Vec<u64>> {
    let mut row = alloc::vec![0u64; full as usize + 1];
    for s in 1..=full {
        let id = normalize_id(&lex_unrank(&Natural::from(s), n, ka)?, ka)?;
        row[s as usize] = to_u64(&max_cross_size(&id, kb)).expect("bounded by C(n, k_b)");
    }
    debug_assert!(row[1..].windows(2).all(|w| w[0] >= w[1]));
    Ok(row)
}

impl Tables {
    fn build(inst: &ProblemInstance) -> Result<Tables> {
        let t = inst.t();
        let n = inst.n();
        let full: Vec<u64> = inst
            .ks()
            .iter()
            .map(|&k| to_u64(&binomial(n as i64, k as i64)).expect("within budget"))
            .collect();
        let mut by_uniformity: BTreeMap<(usize, usize), Vec<u64>> = BTreeMap::new();
        let mut cap = alloc::vec![alloc::vec![Vec::new(); t]; t];
        for a in 0..t {
            for b in 0..t {
                if a == b {
                    continue;
                }
                let key = (inst.ks()[a], inst.ks()[b]);
                if let alloc::collections::btree_map::Entry::Vacant(e) = by_uniformity.entry(key) {
                    e.insert(cap_table(n, key.0, key.1, full[a])?);
                }
                cap[a][b] = by_uniformity[&key].clone();
            }
        }
        let mut reach = alloc::vec![alloc::vec![Vec::new(); t]; t];
        for a in 0..t {
            for b in 0..t {
                if a == b {
                    continue;
                }
                let back = &cap[b][a];
                let mut row = alloc::vec![0u64; full[a] as usize + 1];
                for s in 1..=full[a] {
                    // back[1..] is non-increasing
                    let cnt = back[1..].partition_point(|&c| c >= s);
                    row[s as usize] = cnt as u64;
                }
                reach[a][b] = row;
            }
        }
        Ok(Tables { cap, reach, full })
    }

    fn limit(&self, a: usize, s: u64, b: usize) -> u64 {
        self.cap[a][b][s as usize].min(self.reach[a][b][s as usize])
    }
}

struct Search<'t> {
    tables: &'t Tables,
    t: usize,
    chosen: Vec<u64>,
    best: u64,
    found: Vec<Vec<u64>>,
    nodes: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, sum: u64, upper: &[u64]) {
        self.nodes += 1;
        if depth == self.t - 1 {
            let s = upper[depth];
            if s == 0 {
                return;
            }
            let total = sum + s;
            if total > self.best {
                self.best = total;
                self.found.clear();
            }
            if total == self.best {
                let mut w = self.chosen.clone();
                w.push(s);
                self.found.push(w);
            }
            return;
        }
        for s in (1..=upper[depth]).rev() {
            let mut next = upper.to_vec();
            let mut dead = false;
            for b in depth + 1..self.t {
                next[b] = next[b].min(self.tables.limit(depth, s, b));
                dead |= next[b] == 0;
            }
            if dead {
                continue;
            }
            let optimistic = sum + s + next[depth + 1..].iter().sum::<u64>();
            if optimistic < self.best {
                continue;
            }
            self.chosen.push(s);
            self.run(depth + 1, sum + s, &next);
            self.chosen.pop();
        }
    }
}

/// Exhaustive maximum of `Σ |A_j|` over non-empty pairwise
/// cross-intersecting L-initial families.
pub fn linitial_search(inst: &ProblemInstance, budget: u64) -> Result<OracleResult> {
    let n = inst.n() as i64;
    let required: Natural = inst
        .ks()
        .iter()
        .map(|&k| binomial(n, k as i64))
        .product();
    if required > Natural::from(budget) {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let tables = Tables::build(inst)?;
    let mut search = Search {
        tables: &tables,
        t: inst.t(),
        chosen: Vec::new(),
        best: 0,
        found: Vec::new(),
        nodes: 0,
    };
    search.run(0, 0, &tables.full);
    let mut found = search.found;
    found.sort();

    let mut witnesses = Vec::with_capacity(found.len());
    let mut ids = Vec::with_capacity(found.len());
    let mut witness_cases = Vec::with_capacity(found.len());
    let mut matched = BTreeSet::new();
    for w in &found {
        let sizes: Vec<Natural> = w.iter().map(|&s| Natural::from(s)).collect();
        let mut row = Vec::with_capacity(w.len());
        for (j, s) in sizes.iter().enumerate() {
            row.push(id_of_size(inst.n(), inst.k(j + 1), s)?);
        }
        let cases = match_sizes(inst, &sizes);
        matched.extend(cases.iter().copied());
        witnesses.push(sizes);
        ids.push(row);
        witness_cases.push(cases);
    }
    Ok(OracleResult {
        optimum: Natural::from(search.best),
        witnesses,
        ids,
        witness_cases,
        matched_case: matched.into_iter().collect(),
        complete: true,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bound::theorem_bound;
    use alloc::vec;

    fn inst(n: usize, ks: &[usize]) -> ProblemInstance {
        ProblemInstance::new(n, ks.to_vec()).unwrap()
    }

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn search_examples() {
        let r = linitial_search(&inst(4, &[2, 2]), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.optimum, nat(6));
        let r = linitial_search(&inst(9, &[4, 3, 2]), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.optimum, nat(99));
        assert_eq!(r.witnesses, vec![vec![nat(91), nat(7), nat(1)]]);
        assert_eq!(r.matched_case, vec![CaseLabel::StarT]);
    }

    #[test]
    fn budget_is_enforced() {
        let p = inst(20, &[3, 3, 3]);
        match linitial_search(&p, DEFAULT_BUDGET) {
            Err(Error::BudgetExceeded { required, .. }) => assert_eq!(required, nat(1140u64.pow(3))),
            other => panic!("{other:?}"),
        }
        let r = linitial_search(&p, 2_000_000_000).unwrap();
        assert_eq!(r.optimum, nat(513));
        assert_eq!(r.witnesses, vec![vec![nat(171); 3]]);
        assert_eq!(r.matched_case, vec![CaseLabel::FullStars]);
    }

    #[test]
    fn degenerate_witnesses_are_every_split() {
        let p = inst(7, &[4, 3]);
        let r = linitial_search(&p, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.optimum, nat(35));
        assert_eq!(r.witnesses.len(), 34);
        assert!(r.witness_cases.iter().all(|c| c.contains(&CaseLabel::ComplementPair)));
    }

    #[test]
    fn threshold_examples() {
        let p = inst(9, &[4, 3, 2]);
        assert!(pairwise_threshold_feasible(&[nat(56), nat(28), nat(8)], &p).unwrap());
        assert!(pairwise_threshold_feasible(&[nat(91), nat(7), nat(1)], &p).unwrap());
        assert!(!pairwise_threshold_feasible(&[nat(126), nat(1), nat(1)], &p).unwrap());
        assert!(pairwise_threshold_feasible(&[nat(0), nat(1), nat(1)], &p).is_err());
    }

    #[test]
    fn optimum_matches_bound_small_grid() {
        for p in ProblemInstance::grid(8, 2, 3) {
            let r = linitial_search(&p, DEFAULT_BUDGET).unwrap();
            assert_eq!(r.optimum, theorem_bound(&p).bound, "{p}");
            for w in &r.witnesses {
                assert!(pairwise_threshold_feasible(w, &p).unwrap(), "{p} {w:?}");
            }
        }
    }
}
