//! Explicit families attaining the maximum, and their verification.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::binom::{binomial, to_u64, Natural};
use crate::bound::{theorem_bound, Branch};
use crate::error::Result;
use crate::instance::ProblemInstance;
use crate::kset::{enumerate_lex, KSet};
use crate::linitial::{are_cross_intersecting, cross_intersecting_sets, normalize_id, LInitialFamily};

/// Largest `|A_i| * |A_j|` verified by pairwise enumeration.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// `A_1` meets a `k_t`-set `T`, the rest contain `T`.
    StarT,
    /// Full stars at a common element.
    FullStars,
    /// `t = 2`, `n = k_1 + k_2`, `A_2` avoids the complements of `A_1`.
    ComplementPair,
    /// All `k` equal, `n = 2k`, `t >= 3`, every family equal to a
    /// complement-free half of `C([n], k)`.
    EqualKComplement,
}

impl CaseLabel {
    pub fn label(self) -> &'static str {
        match self {
            CaseLabel::StarT => "star-T",
            CaseLabel::FullStars => "full-stars",
            CaseLabel::ComplementPair => "complement-pair",
            CaseLabel::EqualKComplement => "equal-k-complement",
        }
    }
}

/// A `k`-uniform family over `[n]`, described by a membership rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `k`-sets meeting `set`.
    Meets { k: usize, set: KSet },
    /// `k`-sets containing `set`.
    Contains { k: usize, set: KSet },
    /// `k`-sets containing `element`.
    Star { k: usize, element: usize },
    /// `k`-sets holding at least two elements of a 3-set.
    Majority { k: usize, set: KSet },
    LInitial(LInitialFamily),
    /// `k`-sets whose complement is not in `of`.
    AvoidComplements { k: usize, of: alloc::boxed::Box<Family> },
}

impl Family {
    pub fn k(&self) -> usize {
        match self {
            Family::Meets { k, .. }
            | Family::Contains { k, .. }
            | Family::Star { k, .. }
            | Family::Majority { k, .. }
            | Family::AvoidComplements { k, .. } => *k,
            Family::LInitial(f) => f.k(),
        }
    }

    /// Closed-form size.
    pub fn size(&self, n: usize) -> Natural {
        let n = n as i64;
        match self {
            Family::Meets { k, set } => {
                binomial(n, *k as i64) - binomial(n - set.len() as i64, *k as i64)
            }
            Family::Contains { k, set } => {
                binomial(n - set.len() as i64, *k as i64 - set.len() as i64)
            }
            Family::Star { k, .. } => binomial(n - 1, *k as i64 - 1),
            Family::Majority { k, .. } => {
                let k = *k as i64;
                binomial(3, 2) * binomial(n - 3, k - 2) + binomial(n - 3, k - 3)
            }
            Family::LInitial(f) => f.size().clone(),
            Family::AvoidComplements { k, of } => {
                let outside = binomial(n, *k as i64);
                if of.k() as i64 + *k as i64 == n {
                    outside - of.size(n as usize)
                } else {
                    outside
                }
            }
        }
    }

    pub fn contains(&self, s: &KSet) -> bool {
        if s.len() != self.k() {
            return false;
        }
        match self {
            Family::Meets { set, .. } => s.intersects(set),
            Family::Contains { set, .. } => s.is_superset_of(set),
            Family::Star { element, .. } => s.contains(*element),
            Family::Majority { set, .. } => {
                set.elements().iter().filter(|&&x| s.contains(x)).count() >= 2
            }
            Family::LInitial(f) => f.id().last_member().is_some_and(|l| s.lex_cmp(&l).is_le()),
            Family::AvoidComplements { of, .. } => !of.contains(&s.complement()),
        }
    }

    /// Members in lex order, by filtering `C([n], k)`.
    pub fn members(&self, n: usize) -> Vec<KSet> {
        enumerate_lex(n, self.k()).filter(|s| self.contains(s)).collect()
    }

    /// The same family as an L-initial one, when it is one by construction.
    pub fn as_linitial(&self, n: usize) -> Option<LInitialFamily> {
        match self {
            Family::LInitial(f) => Some(f.clone()),
            Family::Star { k, element: 1 } => {
                LInitialFamily::from_size(n, *k, &binomial(n as i64 - 1, *k as i64 - 1)).ok()
            }
            Family::Meets { k, set } | Family::Contains { k, set }
                if set.elements().iter().copied().eq(1..=set.len()) =>
            {
                LInitialFamily::from_size(n, *k, &self.size(n)).ok()
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalConfig {
    pub case_label: CaseLabel,
    /// `A_1, ..., A_t`.
    pub witness: Vec<Family>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Enumeration,
    SizeThreshold,
    /// Neither enumeration nor the threshold test applies.
    Unverified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub sizes: Vec<Natural>,
    pub total: Natural,
    pub non_empty: bool,
    pub cross_intersecting: bool,
    /// Enumerated member counts agree with the closed-form sizes.
    pub sizes_match: bool,
    pub achieves_bound: bool,
    pub method: Method,
}

impl Verification {
    pub fn ok(&self) -> bool {
        self.non_empty
            && self.cross_intersecting
            && self.sizes_match
            && self.achieves_bound
            && self.method != Method::Unverified
    }
}

impl ExtremalConfig {
    pub fn verify(&self, inst: &ProblemInstance) -> Verification {
        let n = inst.n();
        let sizes: Vec<Natural> = self.witness.iter().map(|f| f.size(n)).collect();
        let total: Natural = sizes.iter().sum();
        let non_empty = sizes.iter().all(|s| *s > Natural::from(0u32));
        let largest_pair = pair_products(&sizes).max();
        let enumerable = largest_pair.is_some_and(|p| p <= ENUMERATION_LIMIT);

        let (method, cross_intersecting, sizes_match) = if enumerable {
            let members: Vec<Vec<KSet>> = self.witness.iter().map(|f| f.members(n)).collect();
            let sizes_match = members
                .iter()
                .zip(&sizes)
                .all(|(m, s)| Natural::from(m.len()) == *s);
            let ok = pairs(members.len())
                .all(|(a, b)| cross_intersecting_sets(&members[a], &members[b]));
            (Method::Enumeration, ok, sizes_match)
        } else {
            let lin: Option<Vec<LInitialFamily>> =
                self.witness.iter().map(|f| f.as_linitial(n)).collect();
            match lin {
                Some(lin) => {
                    let ok = pairs(lin.len()).all(|(a, b)| are_cross_intersecting(&lin[a], &lin[b]));
                    let sizes_match = lin.iter().zip(&sizes).all(|(f, s)| f.size() == s);
                    (Method::SizeThreshold, ok, sizes_match)
                }
                None => (Method::Unverified, false, false),
            }
        };
        let achieves_bound = total == theorem_bound(inst).bound;
        Verification {
            sizes,
            total,
            non_empty,
            cross_intersecting,
            sizes_match,
            achieves_bound,
            method,
        }
    }
}

fn pairs(t: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..t).flat_map(move |a| (a + 1..t).map(move |b| (a, b)))
}

fn pair_products(sizes: &[Natural]) -> impl Iterator<Item = u64> + '_ {
    pairs(sizes.len()).map(|(a, b)| to_u64(&(&sizes[a] * &sizes[b])).unwrap_or(u64::MAX))
}

fn t_set_config(inst: &ProblemInstance) -> ExtremalConfig {
    let n = inst.n();
    let t_set = KSet::interval(n, 1, inst.k(inst.t()));
    let mut witness = alloc::vec![Family::Meets {
        k: inst.k(1),
        set: t_set.clone(),
    }];
    for j in 2..=inst.t() {
        witness.push(Family::Contains {
            k: inst.k(j),
            set: t_set.clone(),
        });
    }
    ExtremalConfig {
        case_label: CaseLabel::StarT,
        witness,
    }
}

fn stars_config(inst: &ProblemInstance) -> ExtremalConfig {
    ExtremalConfig {
        case_label: CaseLabel::FullStars,
        witness: inst
            .ks()
            .iter()
            .map(|&k| Family::Star { k, element: 1 })
            .collect(),
    }
}

/// `A_1` sizes used for complement-pair witnesses: the smallest, a full
/// star, and the largest legal size.
fn complement_pair_sizes(inst: &ProblemInstance) -> Vec<Natural> {
    let n = inst.n() as i64;
    let k1 = inst.k(1) as i64;
    let sizes: BTreeSet<Natural> = [
        Natural::from(1u32),
        binomial(n - 1, k1 - 1),
        binomial(n, k1) - 1u32,
    ]
    .into_iter()
    .filter(|s| *s >= Natural::from(1u32))
    .collect();
    sizes.into_iter().collect()
}

/// Witness families for every equality case that applies to `inst`.
pub fn extremal_configs(inst: &ProblemInstance) -> Result<Vec<ExtremalConfig>> {
    let n = inst.n();
    let bound = theorem_bound(inst);
    let mut out = Vec::new();
    if bound.attaining.contains(&Branch::TSet) {
        out.push(t_set_config(inst));
    }
    if bound.attaining.contains(&Branch::Stars) {
        out.push(stars_config(inst));
    }
    if inst.degenerate() {
        for s in complement_pair_sizes(inst) {
            let a1 = Family::LInitial(LInitialFamily::from_size(n, inst.k(1), &s)?);
            out.push(ExtremalConfig {
                case_label: CaseLabel::ComplementPair,
                witness: alloc::vec![
                    a1.clone(),
                    Family::AvoidComplements {
                        k: inst.k(2),
                        of: alloc::boxed::Box::new(a1),
                    },
                ],
            });
        }
    }
    let k = inst.k(1);
    if inst.all_equal() && n == 2 * k && inst.t() >= 3 {
        let halves = [
            Some(Family::Star { k, element: 1 }),
            (k >= 2).then(|| Family::Majority {
                k,
                set: KSet::interval(n, 1, 3),
            }),
        ];
        for half in halves.into_iter().flatten() {
            out.push(ExtremalConfig {
                case_label: CaseLabel::EqualKComplement,
                witness: alloc::vec![half; inst.t()],
            });
        }
    }
    Ok(out)
}

/// Case labels whose closed-form size vector equals `sizes`.
pub fn match_sizes(inst: &ProblemInstance, sizes: &[Natural]) -> Vec<CaseLabel> {
    let n = inst.n();
    let mut out = Vec::new();
    // families with the largest uniformity are interchangeable
    let t_set: Vec<Natural> = t_set_config(inst).witness.iter().map(|f| f.size(n)).collect();
    let k1 = inst.k(1);
    let star_t = (1..=inst.t()).filter(|&a| inst.k(a) == k1).any(|a| {
        let mut v = t_set.clone();
        v.swap(0, a - 1);
        sizes == v.as_slice()
    });
    if star_t {
        out.push(CaseLabel::StarT);
    }
    let stars: Vec<Natural> = stars_config(inst).witness.iter().map(|f| f.size(n)).collect();
    if sizes == stars.as_slice() {
        out.push(CaseLabel::FullStars);
    }
    if inst.degenerate() && &sizes[0] + &sizes[1] == binomial(n as i64, inst.k(1) as i64) {
        out.push(CaseLabel::ComplementPair);
    }
    let k = inst.k(1);
    if inst.all_equal() && n == 2 * k && inst.t() >= 3 && sizes == stars.as_slice() {
        out.push(CaseLabel::EqualKComplement);
    }
    out
}

/// ID of a member count, for reporting.
pub fn id_of_size(n: usize, k: usize, size: &Natural) -> Result<crate::linitial::FamilyId> {
    if *size == Natural::from(0u32) {
        return Ok(crate::linitial::FamilyId::empty(n, k));
    }
    normalize_id(&crate::kset::lex_unrank(size, n, k)?, k)
}
