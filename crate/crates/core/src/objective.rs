//! The objective `f_i(R)`: the size of `L([n], R, k_i)` plus, for every
//! other index, the largest L-initial family cross-intersecting it.

use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::{CheckedSub, Zero};

use crate::binom::{binomial, to_u64, Natural};
use crate::error::{Error, Result};
use crate::instance::ProblemInstance;
use crate::kset::{enumerate_lex_from, lex_unrank, KSet};
use crate::linitial::{max_cross_size, normalize_id, size_from_id, FamilyId};

/// `C(n-1, k_i-1)`, the size of the full star and of `L([n], R_0, k_i)`.
pub fn star_size(inst: &ProblemInstance, i: usize) -> Natural {
    binomial(inst.n() as i64 - 1, inst.k(i) as i64 - 1)
}

/// `Z = Σ_{s=2}^{m} C(n-s, k_i-1)`; the ID space has `Z + 1` members.
pub fn id_space_len(inst: &ProblemInstance, i: usize) -> Natural {
    let n = inst.n() as i64;
    let k = inst.k(i) as i64;
    (2..=inst.m(i) as i64)
        .map(|s| binomial(n - s, k - 1))
        .sum::<Natural>()
        + 1u32
}

/// The `k_i`-sets `R_0 ≺ R_1 ≺ ... ≺ R_Z` of ranks `C(n-1,k_i-1) + r`,
/// `r = 0..=Z`, before normalization.
pub fn id_space_sets(inst: &ProblemInstance, i: usize) -> Result<Vec<KSet>> {
    inst.check_index(i)?;
    let start = lex_unrank(&star_size(inst, i), inst.n(), inst.k(i))?;
    let len = to_u64(&id_space_len(inst, i)).expect("ID space fits in memory") as usize;
    Ok(enumerate_lex_from(&start).take(len).collect())
}

/// Canonical IDs of every L-initial `A_i` with
/// `C(n-1,k_i-1) <= |A_i| <= C(n-1,k_i-1) + Z`.
pub fn id_space(inst: &ProblemInstance, i: usize) -> Result<Vec<FamilyId>> {
    id_space_sets(inst, i)?
        .iter()
        .map(|r| normalize_id(r, inst.k(i)))
        .collect()
}

/// `f_i` at one ID, with the per-family sizes that realize it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FEvaluation {
    pub i: usize,
    pub id: FamilyId,
    pub f_value: Natural,
    /// `|A_1|, ..., |A_t|` realized at the ID (index `i - 1` is `A_i`).
    pub per_family_sizes: Vec<Natural>,
    /// `|A_i| - C(n-1, k_i-1)`.
    pub rank_offset: BigInt,
}

fn check_id(inst: &ProblemInstance, i: usize, id: &FamilyId) -> Result<()> {
    inst.check_index(i)?;
    if id.n() != inst.n() || id.k() != inst.k(i) {
        return Err(Error::WrongSize {
            expected: inst.k(i),
            found: id.k(),
        });
    }
    if id.is_empty_family() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

pub fn f_eval(inst: &ProblemInstance, i: usize, id: &FamilyId) -> Result<FEvaluation> {
    check_id(inst, i, id)?;
    let own = size_from_id(id);
    let mut sizes = Vec::with_capacity(inst.t());
    for j in 1..=inst.t() {
        if j == i {
            sizes.push(own.clone());
        } else {
            sizes.push(max_cross_size(id, inst.k(j)));
        }
    }
    let f_value = sizes.iter().sum();
    let rank_offset = BigInt::from(own) - BigInt::from(star_size(inst, i));
    Ok(FEvaluation {
        i,
        id: id.clone(),
        f_value,
        per_family_sizes: sizes,
        rank_offset,
    })
}

/// `f_i` at any set, normalized to a `k_i`-uniform ID first.
pub fn f_at(inst: &ProblemInstance, i: usize, set: &KSet) -> Result<Natural> {
    inst.check_index(i)?;
    let id = normalize_id(set, inst.k(i))?;
    Ok(f_eval(inst, i, &id)?.f_value)
}

/// `f_i({s})`, i.e. at `{s} ∪ [n-k_i+2, n]`.
pub fn f_singleton(inst: &ProblemInstance, i: usize, s: usize) -> Result<Natural> {
    f_at(inst, i, &KSet::new(inst.n(), alloc::vec![s])?)
}

/// Gain `α` of `A_i` and total loss `β` of the other families when the ID
/// moves from `from` to `to`, `from ≼ to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Increments {
    pub alpha: Natural,
    pub beta: Natural,
}

pub fn increments(
    inst: &ProblemInstance,
    i: usize,
    from: &FamilyId,
    to: &FamilyId,
) -> Result<Increments> {
    check_id(inst, i, from)?;
    check_id(inst, i, to)?;
    let (a0, a1) = (size_from_id(from), size_from_id(to));
    if a1 < a0 {
        return Err(Error::Order);
    }
    let mut lost = Natural::zero();
    let mut kept = Natural::zero();
    for j in inst.others(i) {
        lost += max_cross_size(from, inst.k(j));
        kept += max_cross_size(to, inst.k(j));
    }
    // a larger A_i never admits a larger partner family
    let beta = lost
        .checked_sub(&kept)
        .expect("partner families shrink along lex order");
    Ok(Increments {
        alpha: a1 - a0,
        beta,
    })
}

pub fn alpha(inst: &ProblemInstance, i: usize, from: &FamilyId, to: &FamilyId) -> Result<Natural> {
    Ok(increments(inst, i, from, to)?.alpha)
}

pub fn beta(inst: &ProblemInstance, i: usize, from: &FamilyId, to: &FamilyId) -> Result<Natural> {
    Ok(increments(inst, i, from, to)?.beta)
}

/// `β` for lex-consecutive IDs whose later member has maximum `q`:
/// `Σ_{j != i} C(n - q, k_j - (q - k_i))`.
pub fn beta_consecutive(inst: &ProblemInstance, i: usize, q: usize) -> Natural {
    let n = inst.n() as i64;
    let q = q as i64;
    let ki = inst.k(i) as i64;
    inst.others(i)
        .map(|j| binomial(n - q, inst.k(j) as i64 - (q - ki)))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePoint {
    pub rank_offset: u64,
    pub id: FamilyId,
    pub f_value: Natural,
}

/// Result of scanning `f_i` over (part of) the ID space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub i: usize,
    pub scanned: u64,
    pub max_value: Natural,
    /// Every maximizing ID with its rank offset, in lex order.
    pub argmax: Vec<(u64, FamilyId)>,
    pub curve: Option<Vec<CurvePoint>>,
}

impl ScanReport {
    /// Combines reports of two adjacent rank ranges, `self` first.
    pub fn merge(mut self, other: ScanReport) -> ScanReport {
        debug_assert_eq!(self.i, other.i);
        if other.scanned == 0 {
            return self;
        }
        if self.scanned == 0 || other.max_value > self.max_value {
            self.max_value = other.max_value;
            self.argmax = other.argmax;
        } else if other.max_value == self.max_value {
            self.argmax.extend(other.argmax);
        }
        self.scanned += other.scanned;
        self.curve = match (self.curve, other.curve) {
            (Some(mut a), Some(b)) => {
                a.extend(b);
                Some(a)
            }
            _ => None,
        };
        self
    }

    pub fn attains_at(&self, id: &FamilyId) -> bool {
        self.argmax.iter().any(|(_, a)| a == id)
    }
}

/// Which endpoints of the ID space carry the maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndpointSummary {
    pub at_one: bool,
    pub at_m: bool,
    /// Every maximizer is `{1}` or `{m}`; `None` for degenerate instances
    /// where the claim is not made.
    pub endpoints_only: Option<bool>,
    /// `max = theorem bound` for `i = 1`, `max <= bound` otherwise.
    pub bound_relation: bool,
}

/// Scans offsets `range` of the ID space of index `i`.
pub fn f_scan_range(
    inst: &ProblemInstance,
    i: usize,
    range: Range<u64>,
    with_curve: bool,
) -> Result<ScanReport> {
    inst.check_index(i)?;
    let len = to_u64(&id_space_len(inst, i)).expect("ID space fits in u64");
    let range = range.start.min(len)..range.end.min(len);
    let mut report = ScanReport {
        i,
        scanned: 0,
        max_value: Natural::zero(),
        argmax: Vec::new(),
        curve: with_curve.then(Vec::new),
    };
    if range.is_empty() {
        return Ok(report);
    }
    let start = lex_unrank(
        &(star_size(inst, i) + Natural::from(range.start)),
        inst.n(),
        inst.k(i),
    )?;
    for (off, r) in range.clone().zip(enumerate_lex_from(&start)) {
        let id = normalize_id(&r, inst.k(i))?;
        let ev = f_eval(inst, i, &id)?;
        if report.scanned == 0 || ev.f_value > report.max_value {
            report.max_value = ev.f_value.clone();
            report.argmax.clear();
            report.argmax.push((off, id.clone()));
        } else if ev.f_value == report.max_value {
            report.argmax.push((off, id.clone()));
        }
        if let Some(curve) = report.curve.as_mut() {
            curve.push(CurvePoint {
                rank_offset: off,
                id,
                f_value: ev.f_value,
            });
        }
        report.scanned += 1;
    }
    Ok(report)
}

/// Scans the whole ID space of index `i`.
pub fn f_scan(inst: &ProblemInstance, i: usize, with_curve: bool) -> Result<ScanReport> {
    f_scan_range(inst, i, 0..u64::MAX, with_curve)
}

pub fn endpoint_summary(inst: &ProblemInstance, report: &ScanReport) -> Result<EndpointSummary> {
    let i = report.i;
    let n = inst.n();
    let one = normalize_id(&KSet::new(n, alloc::vec![1])?, inst.k(i))?;
    let m = normalize_id(&KSet::new(n, alloc::vec![inst.m(i)])?, inst.k(i))?;
    let endpoints_only = (!inst.degenerate())
        .then(|| report.argmax.iter().all(|(_, id)| *id == one || *id == m));
    let bound = crate::bound::theorem_bound(inst).bound;
    let bound_relation = if i == 1 {
        report.max_value == bound
    } else {
        report.max_value <= bound
    };
    Ok(EndpointSummary {
        at_one: report.attains_at(&one),
        at_m: report.attains_at(&m),
        endpoints_only,
        bound_relation,
    })
}

/// One failure of `f_1({s}) >= f_j({s})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceViolation {
    pub s: usize,
    pub j: usize,
    pub f_first: Natural,
    pub f_other: Natural,
}

/// Checks `f_1({s}) = max_j f_j({s})` for `1 <= s <= m_i` over every `i`.
/// Returns the number of comparisons and any violations.
pub fn index_dominance(inst: &ProblemInstance) -> Result<(usize, Vec<DominanceViolation>)> {
    let s_max = (1..=inst.t()).map(|i| inst.m(i)).max().expect("t >= 2");
    let mut checked = 0;
    let mut bad = Vec::new();
    for s in 1..=s_max {
        let f_first = f_singleton(inst, 1, s)?;
        for j in 2..=inst.t() {
            let f_other = f_singleton(inst, j, s)?;
            checked += 1;
            if f_other > f_first {
                bad.push(DominanceViolation {
                    s,
                    j,
                    f_first: f_first.clone(),
                    f_other,
                });
            }
        }
    }
    Ok((checked, bad))
}
