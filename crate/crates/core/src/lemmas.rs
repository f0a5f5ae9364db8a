//! Exhaustive finite checks of the local-convexity statements about `f_i`
//! over the ID space and its projections.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::binom::Natural;
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::kset::KSet;
use crate::linitial::{max_cross_size, normalize_id, size_from_id};
use crate::objective::{beta_consecutive, id_space_sets, increments};

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 8;

/// Shifts the run formed by the last `c` elements of `set` right by one.
/// `None` when the run already ends at the ground-set maximum.
pub fn c_successor(set: &KSet, c: usize) -> Result<Option<KSet>> {
    let (head, run) = split_run(set, c)?;
    let last = *run.last().expect("c >= 1");
    if last == set.n() {
        return Ok(None);
    }
    let mut e = head.to_vec();
    e.extend(run.iter().map(|x| x + 1));
    Ok(Some(KSet::new(set.n(), e)?))
}

/// Inverse of [`c_successor`]; `None` when the run cannot move left.
pub fn c_predecessor(set: &KSet, c: usize) -> Result<Option<KSet>> {
    let (head, run) = split_run(set, c)?;
    let floor = head.last().copied().unwrap_or(0);
    if run[0] == floor + 1 {
        return Ok(None);
    }
    let mut e = head.to_vec();
    e.extend(run.iter().map(|x| x - 1));
    Ok(Some(KSet::new(set.n(), e)?))
}

fn split_run(set: &KSet, c: usize) -> Result<(&[usize], &[usize])> {
    if c == 0 || c > set.len() {
        return Err(Error::InvalidStep(format!(
            "c = {c} outside [1, {}]",
            set.len()
        )));
    }
    let (head, run) = set.elements().split_at(set.len() - c);
    if run.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::InvalidStep(format!(
            "last {c} elements of {set} are not consecutive"
        )));
    }
    Ok((head, run))
}

fn is_run(set: &KSet, c: usize) -> bool {
    split_run(set, c).is_ok()
}

fn refuse_degenerate(inst: &ProblemInstance) -> Result<()> {
    if inst.degenerate() {
        Err(Error::Degenerate)
    } else {
        Ok(())
    }
}

/// `f_i` over the raw ID space with memoized evaluation. Projected sets
/// live on the ground set `[n - j]` and are padded with `[n-j+1, n]`.
pub struct Lab<'a> {
    inst: &'a ProblemInstance,
    i: usize,
    space: Vec<KSet>,
    members: BTreeSet<Vec<usize>>,
    own: BTreeMap<Vec<usize>, Natural>,
    others: BTreeMap<Vec<usize>, Natural>,
}

impl<'a> Lab<'a> {
    pub fn new(inst: &'a ProblemInstance, i: usize) -> Result<Self> {
        let space = id_space_sets(inst, i)?;
        let members = space.iter().map(|r| r.elements().to_vec()).collect();
        Ok(Lab {
            inst,
            i,
            space,
            members,
            own: BTreeMap::new(),
            others: BTreeMap::new(),
        })
    }

    pub fn space(&self) -> &[KSet] {
        &self.space
    }

    fn pad(&self, s: &KSet) -> KSet {
        let n = self.inst.n();
        let mut e = s.elements().to_vec();
        e.extend(s.n() + 1..=n);
        KSet::new(n, e).expect("projection stays inside [n - j]")
    }

    fn sizes(&mut self, raw: &KSet) -> (Natural, Natural) {
        let key = raw.elements().to_vec();
        if let (Some(a), Some(b)) = (self.own.get(&key), self.others.get(&key)) {
            return (a.clone(), b.clone());
        }
        let id = normalize_id(raw, self.inst.k(self.i)).expect("non-empty k_i-set");
        let a = size_from_id(&id);
        let b: Natural = self
            .inst
            .others(self.i)
            .map(|j| max_cross_size(&id, self.inst.k(j)))
            .sum();
        self.own.insert(key.clone(), a.clone());
        self.others.insert(key, b.clone());
        (a, b)
    }

    /// `f_i` at a `k_i`-set.
    pub fn f_raw(&mut self, raw: &KSet) -> Natural {
        let (a, b) = self.sizes(raw);
        a + b
    }

    /// `f_i(S ∪ [n-j+1, n])` for `S` over `[n-j]`.
    pub fn f(&mut self, s: &KSet) -> Natural {
        let raw = self.pad(s);
        self.f_raw(&raw)
    }

    /// `f_i` at `{lo, ..., hi}` padded at the top to `k_i` elements.
    pub fn f_interval(&mut self, lo: usize, hi: usize) -> Natural {
        let n = self.inst.n();
        let ki = self.inst.k(self.i);
        let s = KSet::interval(n - (ki - (hi + 1 - lo)), lo, hi);
        self.f(&s)
    }

    pub fn contains_raw(&self, raw: &KSet) -> bool {
        self.members.contains(raw.elements())
    }

    pub fn contains(&self, s: &KSet) -> bool {
        self.contains_raw(&self.pad(s))
    }

    /// `R(j)`: members containing `[n-j+1, n]`, with that suffix removed,
    /// in lex order.
    pub fn projected(&self, j: usize) -> Result<Vec<KSet>> {
        let n = self.inst.n();
        let ki = self.inst.k(self.i);
        if j >= ki {
            return Err(Error::InvalidStep(format!("depth {j} outside [0, {}]", ki - 1)));
        }
        let mut out = Vec::new();
        for r in &self.space {
            let e = r.elements();
            if e[ki - j..].iter().copied().eq(n - j + 1..=n) {
                out.push(KSet::new(n - j, e[..ki - j].to_vec())?);
            }
        }
        Ok(out)
    }

    /// Largest `f_i` over `R(j)`.
    pub fn max_projected(&mut self, j: usize) -> Result<Natural> {
        let sets = self.projected(j)?;
        Ok(sets.iter().map(|s| self.f(s)).max().expect("R(j) is non-empty"))
    }
}

/// `R(j)` for index `i`.
pub fn projected_space(inst: &ProblemInstance, i: usize, j: usize) -> Result<Vec<KSet>> {
    Lab::new(inst, i)?.projected(j)
}

/// A failed implication `f(G) >= f(F) => f(H) > f(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub c: usize,
    pub sets: Vec<KSet>,
    pub f_values: Vec<Natural>,
}

/// Outcome counts for a universally quantified implication.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: u64,
    /// Premise false.
    pub vacuous: u64,
    pub passed: u64,
    pub failed: u64,
    /// Failures where all three values coincide.
    pub plateaus: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn record(&mut self, premise: bool, conclusion: bool, witness: impl FnOnce() -> Counterexample) {
        self.checked += 1;
        if !premise {
            self.vacuous += 1;
            self.passed += 1;
        } else if conclusion {
            self.passed += 1;
        } else {
            self.failed += 1;
            let w = witness();
            if w.f_values.windows(2).all(|v| v[0] == v[1]) {
                self.plateaus += 1;
            }
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(w);
            }
        }
    }

    pub fn absorb(&mut self, other: Tally) {
        self.checked += other.checked;
        self.vacuous += other.vacuous;
        self.passed += other.passed;
        self.failed += other.failed;
        self.plateaus += other.plateaus;
        let room = MAX_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexityReport {
    pub i: usize,
    pub depth: usize,
    pub tally: Tally,
}

/// Every triple `F ≺c G ≺c H` in `R(j)`, for every `c` in `[1, k_i - j]`:
/// `f(G) >= f(F)` must imply `f(H) > f(G)`.
pub fn verify_local_convexity(inst: &ProblemInstance, i: usize, j: usize) -> Result<ConvexityReport> {
    refuse_degenerate(inst)?;
    let mut lab = Lab::new(inst, i)?;
    let sets = lab.projected(j)?;
    let width = inst.k(i) - j;
    let mut tally = Tally::default();
    for f_set in &sets {
        for c in 1..=width {
            if !is_run(f_set, c) {
                continue;
            }
            let Some(g_set) = c_successor(f_set, c)? else { continue };
            if !lab.contains(&g_set) {
                continue;
            }
            let Some(h_set) = c_successor(&g_set, c)? else { continue };
            if !lab.contains(&h_set) {
                continue;
            }
            let (ff, fg, fh) = (lab.f(f_set), lab.f(&g_set), lab.f(&h_set));
            tally.record(fg >= ff, fh > fg, || Counterexample {
                c,
                sets: alloc::vec![f_set.clone(), g_set.clone(), h_set.clone()],
                f_values: alloc::vec![ff.clone(), fg.clone(), fh.clone()],
            });
        }
    }
    Ok(ConvexityReport { i, depth: j, tally })
}

/// Down degree of a value sequence, or the first index `p` (0-based) with
/// `v[p+1] < v[p]` after the descent has ended.
pub fn down_degree(values: &[Natural]) -> core::result::Result<usize, usize> {
    let mut g = 0;
    while g + 1 < values.len() && values[g + 1] < values[g] {
        g += 1;
    }
    for p in g..values.len().saturating_sub(1) {
        if values[p + 1] < values[p] {
            return Err(p);
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownUpProfile {
    pub ids: Vec<KSet>,
    pub f_values: Vec<Natural>,
    /// `Ok(g)` for a down-up sequence, `Err(p)` when `f` drops from `p`
    /// to `p + 1` after rising.
    pub down_degree: core::result::Result<usize, usize>,
}

/// `f_i` profile of strictly lex-increasing `k_i`-sets.
pub fn down_up_profile(inst: &ProblemInstance, i: usize, ids: &[KSet]) -> Result<DownUpProfile> {
    inst.check_index(i)?;
    if ids.windows(2).any(|w| w[0].lex_cmp(&w[1]) != core::cmp::Ordering::Less) {
        return Err(Error::Order);
    }
    let mut f_values = Vec::with_capacity(ids.len());
    for r in ids {
        f_values.push(crate::objective::f_at(inst, i, r)?);
    }
    let down_degree = down_degree(&f_values);
    Ok(DownUpProfile {
        ids: ids.to_vec(),
        f_values,
        down_degree,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunsReport {
    pub runs: u64,
    pub down_up: u64,
    pub violations: Vec<DownUpProfile>,
}

/// Profiles every maximal `c`-sequential run inside each `R(j)`.
pub fn verify_down_up_runs(inst: &ProblemInstance, i: usize) -> Result<RunsReport> {
    refuse_degenerate(inst)?;
    let mut lab = Lab::new(inst, i)?;
    let mut report = RunsReport::default();
    for j in 0..inst.k(i) {
        for start in lab.projected(j)? {
            for c in 1..=inst.k(i) - j {
                if !is_run(&start, c) {
                    continue;
                }
                if let Some(prev) = c_predecessor(&start, c)? {
                    if lab.contains(&prev) {
                        continue;
                    }
                }
                let mut run = alloc::vec![start.clone()];
                while let Some(next) = c_successor(run.last().unwrap(), c)? {
                    if !lab.contains(&next) {
                        break;
                    }
                    run.push(next);
                }
                let values: Vec<Natural> = run.iter().map(|s| lab.f(s)).collect();
                report.runs += 1;
                match down_degree(&values) {
                    Ok(_) => report.down_up += 1,
                    Err(p) => {
                        if report.violations.len() < MAX_COUNTEREXAMPLES {
                            report.violations.push(DownUpProfile {
                                ids: run,
                                f_values: values,
                                down_degree: Err(p),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RidgeReport {
    /// `f` at `{2}, {2,3}, ..., {2..k_i+1}`.
    pub low_chain: Vec<Natural>,
    /// `f` at `{m}, {m,m+1}, ..., {m..m+k_i-1}`.
    pub high_chain: Vec<Natural>,
    /// `None` when the chain is not applicable.
    pub low: Option<Tally>,
    pub high: Option<Tally>,
}

impl RidgeReport {
    pub fn ok(&self) -> bool {
        self.low.as_ref().is_none_or(Tally::ok) && self.high.as_ref().is_none_or(Tally::ok)
    }
}

fn ridge_tally(chain: &[Natural], start: usize, n: usize) -> Tally {
    // chain[p] is f at the prefix of length p + 1; the implication for the
    // prefix of length L needs lengths L - 1 and L - 2 >= 1
    let mut tally = Tally::default();
    for len in 3..=chain.len() {
        let (a, b, c) = (&chain[len - 3], &chain[len - 2], &chain[len - 1]);
        tally.record(c <= b, b < a, || Counterexample {
            c: 0,
            sets: alloc::vec![
                KSet::interval(n, start, start + len - 3),
                KSet::interval(n, start, start + len - 2),
                KSet::interval(n, start, start + len - 1),
            ],
            f_values: alloc::vec![a.clone(), b.clone(), c.clone()],
        });
    }
    tally
}

/// Implications along `{2..j}` and `{m..j}`: `f(longer) <= f(shorter)`
/// forces `f(shorter) < f(shorter still)`. Needs `m >= 2`, where both
/// chains live in the ID space.
pub fn verify_ridges(inst: &ProblemInstance, i: usize) -> Result<RidgeReport> {
    refuse_degenerate(inst)?;
    let ki = inst.k(i);
    let m = inst.m(i);
    if m < 2 {
        return Ok(RidgeReport {
            low_chain: Vec::new(),
            high_chain: Vec::new(),
            low: None,
            high: None,
        });
    }
    let mut lab = Lab::new(inst, i)?;
    let low_chain: Vec<Natural> = (2..=ki + 1).map(|j| lab.f_interval(2, j)).collect();
    let high_chain: Vec<Natural> = (m..=m + ki - 1).map(|j| lab.f_interval(m, j)).collect();
    let low = (ki >= 2).then(|| ridge_tally(&low_chain, 2, inst.n()));
    let high = Some(ridge_tally(&high_chain, m, inst.n()));
    Ok(RidgeReport {
        low_chain,
        high_chain,
        low,
        high,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedCheck {
    pub name: String,
    /// `None` when not applicable to the instance.
    pub holds: Option<bool>,
    pub detail: String,
}

fn check(name: &str, holds: Option<bool>, detail: String) -> NamedCheck {
    NamedCheck {
        name: name.into(),
        holds,
        detail,
    }
}

fn max2(a: &Natural, b: &Natural) -> Natural {
    a.max(b).clone()
}

/// Recomputes the chain of max-equalities that reduces `max f_i` over the
/// ID space to `max{f_i({1}), f_i({m})}`.
pub fn reduction_chain(inst: &ProblemInstance, i: usize) -> Result<Vec<NamedCheck>> {
    refuse_degenerate(inst)?;
    let n = inst.n();
    let ki = inst.k(i);
    let m = inst.m(i);
    let mut lab = Lab::new(inst, i)?;
    let mut out = Vec::new();
    let f_one = lab.f_interval(1, 1);
    let f_m = lab.f_interval(m, m);
    let ends = max2(&f_one, &f_m);
    let top = lab.max_projected(0)?;

    if m < 2 {
        let note = String::from("space is the single ID {1}");
        for name in ["frr", "fr", "dd", "d", "eq35", "eq33"] {
            out.push(check(name, None, note.clone()));
        }
        out.push(check("ccc", Some(top == ends), format!("max {top}, endpoints {ends}")));
        return Ok(out);
    }

    let low_top = lab.f_interval(2, ki + 1);
    let high_top = lab.f_interval(m, m + ki - 1);

    let mut levels = Vec::with_capacity(ki);
    for j in 0..ki {
        levels.push(lab.max_projected(j)?);
    }
    if ki >= 2 {
        let rhs = max2(&max2(&low_top, &high_top), &levels[1]);
        out.push(check("frr", Some(levels[0] == rhs), format!("{} vs {rhs}", levels[0])));
    } else {
        out.push(check("frr", None, "k_i = 1 has no R(1)".into()));
    }
    let mut fr_ok = levels[ki - 1] == ends;
    let mut fr_detail = format!("R({}) max {} vs {ends}", ki - 1, levels[ki - 1]);
    for j in 1..ki.saturating_sub(1) {
        let rhs = max2(
            &max2(&lab.f_interval(2, ki + 1 - j), &lab.f_interval(m, m + ki - 1 - j)),
            &levels[j + 1],
        );
        if levels[j] != rhs {
            fr_ok = false;
            fr_detail = format!("R({j}) max {} vs {rhs}", levels[j]);
        }
    }
    out.push(check("fr", Some(fr_ok), fr_detail));

    let f_two = lab.f_interval(2, 2);
    let low_all = (2..=ki + 1).map(|j| lab.f_interval(2, j)).max().unwrap();
    let mid = max2(&low_top, &f_two);
    let dd = low_all <= mid && mid <= max2(&low_top, &ends);
    out.push(check("dd", Some(dd), format!("{low_all} <= {mid} <= max({low_top}, {ends})")));

    let high_all = (m..=m + ki - 1).map(|j| lab.f_interval(m, j)).max().unwrap();
    let d_rhs = max2(&high_top, &f_m);
    out.push(check("d", Some(high_all == d_rhs), format!("{high_all} vs {d_rhs}")));

    let below = KSet::new(n, {
        let mut e = alloc::vec![m - 1];
        e.extend(n - ki + 2..=n);
        e
    })?;
    let above = KSet::interval(n, m, m + ki - 1);
    let b_id = normalize_id(&below, ki)?;
    let a_id = normalize_id(&above, ki)?;
    let inc = increments(inst, i, &b_id, &a_id)?;
    let closed: Natural = inst
        .others(i)
        .map(|j| crate::binom::binomial((n - (m + ki - 1)) as i64, inst.k(j) as i64 - m as i64 + 1))
        .sum();
    let f_below = lab.f_raw(&below);
    let eq35 = inc.alpha == Natural::from(1u32)
        && inc.beta == closed
        && inc.beta >= Natural::from(1u32)
        && high_top <= f_below
        && f_below <= ends;
    out.push(check(
        "eq35",
        Some(eq35),
        format!("beta {} (closed {closed}), {high_top} <= {f_below} <= {ends}", inc.beta),
    ));

    let eq33_rhs = max2(&low_top, &ends);
    out.push(check("eq33", Some(top == eq33_rhs), format!("{top} vs {eq33_rhs}")));

    let first = KSet::new(n, {
        let mut e = alloc::vec![1];
        e.extend(n - ki + 2..=n);
        e
    })?;
    let inc = increments(
        inst,
        i,
        &normalize_id(&first, ki)?,
        &normalize_id(&KSet::interval(n, 2, ki + 1), ki)?,
    )?;
    let closed: Natural = inst
        .others(i)
        .map(|j| crate::binom::binomial((n - ki - 1) as i64, inst.k(j) as i64 - 1))
        .sum();
    let step = inc.alpha == Natural::from(1u32)
        && inc.beta == closed
        && inc.beta >= Natural::from(1u32)
        && f_one >= low_top;
    out.push(check(
        "first-step",
        Some(step),
        format!("alpha {}, beta {} (closed {closed}), {f_one} >= {low_top}", inc.alpha, inc.beta),
    ));
    out.push(check("ccc", Some(top == ends), format!("max {top}, endpoints {ends}")));
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IncrementReport {
    /// Pairs where `α` and `β` were compared against prefix sums of
    /// consecutive steps and `f(b) - f(a) = α - β` was checked.
    pub pairs: u64,
    pub telescoping_failures: u64,
    pub identity_failures: u64,
    pub consecutive: u64,
    pub closed_form_failures: u64,
    /// `c`-sequential pairs compared by `(c, max F, max G)`.
    pub sequential_pairs: u64,
    pub invariance_failures: u64,
}

impl IncrementReport {
    pub fn ok(&self) -> bool {
        self.telescoping_failures == 0
            && self.identity_failures == 0
            && self.closed_form_failures == 0
            && self.invariance_failures == 0
    }
}

/// Telescoping and the increment identity over all ID pairs, the closed
/// form of `β` for consecutive IDs, and the dependence of `α`, `β` on
/// `(c, max F, max G)` alone for `c`-sequential pairs.
pub fn verify_increments(inst: &ProblemInstance, i: usize) -> Result<IncrementReport> {
    let mut lab = Lab::new(inst, i)?;
    let ki = inst.k(i);
    let space = lab.space().to_vec();
    let ids: Vec<_> = space
        .iter()
        .map(|r| normalize_id(r, ki))
        .collect::<Result<_>>()?;
    let f: Vec<Natural> = space.iter().map(|r| lab.f_raw(r)).collect();
    let mut rep = IncrementReport::default();

    let mut alpha_prefix = alloc::vec![Natural::from(0u32)];
    let mut beta_prefix = alloc::vec![Natural::from(0u32)];
    for p in 0..space.len().saturating_sub(1) {
        let inc = increments(inst, i, &ids[p], &ids[p + 1])?;
        rep.consecutive += 1;
        if inc.beta != beta_consecutive(inst, i, space[p + 1].max().unwrap()) {
            rep.closed_form_failures += 1;
        }
        alpha_prefix.push(&alpha_prefix[p] + inc.alpha);
        beta_prefix.push(&beta_prefix[p] + inc.beta);
    }
    for a in 0..space.len() {
        for b in a + 1..space.len() {
            let inc = increments(inst, i, &ids[a], &ids[b])?;
            rep.pairs += 1;
            if inc.alpha != &alpha_prefix[b] - &alpha_prefix[a]
                || inc.beta != &beta_prefix[b] - &beta_prefix[a]
            {
                rep.telescoping_failures += 1;
            }
            let lhs = BigInt::from(f[b].clone()) - BigInt::from(f[a].clone());
            let rhs = BigInt::from(inc.alpha) - BigInt::from(inc.beta);
            if lhs != rhs {
                rep.identity_failures += 1;
            }
        }
    }

    let mut seen: BTreeMap<(usize, usize, usize), (Natural, Natural)> = BTreeMap::new();
    for (p, r) in space.iter().enumerate() {
        for c in 1..=ki {
            if !is_run(r, c) {
                continue;
            }
            let Some(next) = c_successor(r, c)? else { continue };
            if !lab.contains_raw(&next) {
                continue;
            }
            let inc = increments(inst, i, &ids[p], &normalize_id(&next, ki)?)?;
            rep.sequential_pairs += 1;
            let key = (c, r.max().unwrap(), next.max().unwrap());
            match seen.get(&key) {
                Some((a, b)) if (a, b) != (&inc.alpha, &inc.beta) => rep.invariance_failures += 1,
                Some(_) => {}
                None => {
                    seen.insert(key, (inc.alpha, inc.beta));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn inst(n: usize, ks: &[usize]) -> ProblemInstance {
        ProblemInstance::new(n, ks.to_vec()).unwrap()
    }

    fn set(n: usize, e: &[usize]) -> KSet {
        KSet::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn c_successor_examples() {
        assert_eq!(c_successor(&set(9, &[2, 3, 4]), 2).unwrap(), Some(set(9, &[2, 4, 5])));
        assert_eq!(c_successor(&set(9, &[2, 3, 4]), 3).unwrap(), Some(set(9, &[3, 4, 5])));
        assert_eq!(c_successor(&set(9, &[1, 8, 9]), 2).unwrap(), None);
        assert!(c_successor(&set(9, &[2, 3, 5]), 2).is_err());
        assert!(c_successor(&set(9, &[2, 3, 5]), 0).is_err());
        assert!(c_successor(&set(9, &[2, 3, 5]), 4).is_err());
        assert_eq!(c_predecessor(&set(9, &[2, 4, 5]), 2).unwrap(), Some(set(9, &[2, 3, 4])));
        assert_eq!(c_predecessor(&set(9, &[2, 3, 4]), 2).unwrap(), None);
        assert_eq!(c_predecessor(&set(9, &[1, 2]), 2).unwrap(), None);
    }

    #[test]
    fn projected_spaces() {
        let p = inst(9, &[4, 3, 2]);
        let r0 = projected_space(&p, 1, 0).unwrap();
        assert_eq!(r0.len(), 36);
        let r3 = projected_space(&p, 1, 3).unwrap();
        assert_eq!(r3, vec![set(6, &[1]), set(6, &[2])]);
        assert!(projected_space(&p, 1, 4).is_err());
    }

    #[test]
    fn down_degree_cases() {
        let v = |xs: &[u64]| xs.iter().map(|&x| Natural::from(x)).collect::<Vec<_>>();
        assert_eq!(down_degree(&v(&[5, 5, 5])), Ok(0));
        assert_eq!(down_degree(&v(&[5, 4, 3, 1])), Ok(3));
        assert_eq!(down_degree(&v(&[5, 4, 4, 7])), Ok(1));
        assert_eq!(down_degree(&v(&[5, 6, 4])), Err(1));
        assert_eq!(down_degree(&v(&[3])), Ok(0));
    }

    #[test]
    fn convexity_examples() {
        let p = inst(8, &[3, 3]);
        let r = verify_local_convexity(&p, 1, 0).unwrap();
        assert!(r.tally.checked > 0 && r.tally.ok(), "{r:?}");
        let p = inst(9, &[4, 3, 2]);
        for j in 0..4 {
            let r = verify_local_convexity(&p, 1, j).unwrap();
            assert!(r.tally.ok(), "{r:?}");
        }
        assert_eq!(
            verify_local_convexity(&inst(7, &[4, 3]), 1, 0),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn ridges_and_chain_example() {
        let p = inst(9, &[4, 3, 2]);
        let r = verify_ridges(&p, 1).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.low_chain.len(), 4);
        for c in reduction_chain(&p, 1).unwrap() {
            assert_eq!(c.holds, Some(true), "{c:?}");
        }
    }

    #[test]
    fn ridges_not_applicable() {
        let p = inst(6, &[1, 1, 1]);
        let r = verify_ridges(&p, 1).unwrap();
        assert!(r.low.is_none() && r.high.is_none());
    }

    #[test]
    fn increments_example() {
        let p = inst(9, &[4, 3, 2]);
        for i in 1..=3 {
            let r = verify_increments(&p, i).unwrap();
            assert!(r.ok() && r.pairs > 0 && r.sequential_pairs > 0, "{r:?}");
        }
    }

    #[test]
    fn runs_example() {
        let r = verify_down_up_runs(&inst(9, &[4, 3, 2]), 1).unwrap();
        assert!(r.runs > 0);
        assert_eq!(r.runs, r.down_up);
    }
}
