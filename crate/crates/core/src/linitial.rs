//! L-initial families: the first `r` members of `C([n], k)` in lex order,
//! identified by their lex-last member.
//!
//! A [`FamilyId`] is kept canonical: at most `k` elements and no trailing
//! run that continues up to `n` (except for the whole of `C([n], k)`, whose
//! only possible ID is `{n-k+1, ..., n}`). The empty family uses the empty
//! set as its reserved ID.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::binom::{binomial, to_u64, Natural};
use crate::error::{Error, Result};
use crate::kset::{enumerate_lex, lex_unrank, KSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyId {
    n: usize,
    k: usize,
    id: KSet,
}

impl FamilyId {
    /// The reserved ID of the empty `k`-uniform family.
    pub fn empty(n: usize, k: usize) -> Self {
        FamilyId {
            n,
            k,
            id: KSet::empty(n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn set(&self) -> &KSet {
        &self.id
    }

    pub fn is_empty_family(&self) -> bool {
        self.id.is_empty()
    }

    /// Padding of the ID back to its `k`-element lex-last member.
    pub fn last_member(&self) -> Option<KSet> {
        if self.is_empty_family() {
            return None;
        }
        let s = self.id.len();
        let mut elems = self.id.elements().to_vec();
        elems.extend(self.n - (self.k - s) + 1..=self.n);
        Some(KSet::from_sorted(self.n, elems))
    }
}

impl core::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.id.to_id_string())
    }
}

fn check_uniformity(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::MalformedSet(format!("uniformity {k} outside [1, {n}]")));
    }
    Ok(())
}

/// The set `B` with `A ∩ B = {q}` and `A ∪ B = [q]`, `q = max A`.
pub fn partner(a: &KSet) -> Result<KSet> {
    let q = a.max().ok_or(Error::EmptySet)?;
    let elems = (1..=q).filter(|&x| x == q || !a.contains(x)).collect();
    Ok(KSet::from_sorted(a.n(), elems))
}

/// `|L([n], A, k)| = |{F ∈ C([n], k) : F ≺ A}|` for any set `A`, summed by
/// where a member first departs from `A`: a member that agrees with `A`
/// below `j`, contains `j ∉ A` and has already matched `d - 1` elements of
/// `A` contributes `C(n - j, k - d)`; members with `F ∩ [max A] = A` add
/// `C(n - max A, k - |A|)`.
pub fn lex_downset_size(a: &KSet, k: usize) -> Natural {
    let n = a.n() as i64;
    let k = k as i64;
    let mut total = Natural::zero();
    let mut prev = 0usize;
    for (d0, &x) in a.elements().iter().enumerate() {
        let d = d0 as i64 + 1;
        for j in prev + 1..x {
            total += binomial(n - j as i64, k - d);
        }
        prev = x;
    }
    total + binomial(n - prev as i64, k - a.len() as i64)
}

/// Canonical ID of `L([n], A, k)`.
///
/// An over-long `A` (`|A| > k`) is first cut back to `(A ∩ [j]) ∪ {j}`
/// with `j = max([a_k] \ A)`; if no such `j` exists the family is empty.
/// The lex-last `k`-set of the family then has its trailing run ending at
/// `n` stripped.
pub fn normalize_id(a: &KSet, k: usize) -> Result<FamilyId> {
    let n = a.n();
    check_uniformity(n, k)?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut a = a.clone();
    if a.len() > k {
        let a_k = a.elements()[k - 1];
        let Some(j) = (1..a_k).rev().find(|&x| !a.contains(x)) else {
            return Ok(FamilyId::empty(n, k));
        };
        a = a.truncated(j).with(j);
    }
    let last = if a.len() == k {
        a.clone()
    } else {
        lex_unrank(&lex_downset_size(&a, k), n, k)?
    };
    let id = strip_run_to_n(&last);
    debug_assert_eq!(lex_downset_size(&id, k), lex_downset_size(&a, k));
    Ok(FamilyId { n, k, id })
}

/// Drops the maximal run `{p+1, ..., n}` from a set whose maximum is `n`,
/// unless nothing would be left.
fn strip_run_to_n(last: &KSet) -> KSet {
    let n = last.n();
    let e = last.elements();
    if e.last() != Some(&n) {
        return last.clone();
    }
    let mut cut = e.len();
    while cut > 0 && e[cut - 1] == n - (e.len() - cut) {
        cut -= 1;
    }
    if cut == 0 {
        last.clone()
    } else {
        KSet::from_sorted(n, e[..cut].to_vec())
    }
}

/// Family size via the partner `B = {b_1, ..., b_s}` of the ID:
/// `Σ_p C(n - b_p, k - b_p + p - 1)`.
pub fn size_from_id(fid: &FamilyId) -> Natural {
    if fid.is_empty_family() {
        return Natural::zero();
    }
    let b = partner(&fid.id).expect("non-empty ID");
    partner_sum(&b, fid.n, fid.k)
}

/// `Σ_p C(n - x_p, k - x_p + p - 1)` over the elements `x_1 < x_2 < ...` of `xs`.
fn partner_sum(xs: &KSet, n: usize, k: usize) -> Natural {
    let (n, k) = (n as i64, k as i64);
    xs.elements()
        .iter()
        .enumerate()
        .map(|(p, &x)| binomial(n - x as i64, k - x as i64 + p as i64))
        .sum()
}

/// Family size by summing over where members depart from the ID; an
/// independent route to [`size_from_id`].
pub fn size_from_id_direct(fid: &FamilyId) -> Natural {
    if fid.is_empty_family() {
        return Natural::zero();
    }
    lex_downset_size(&fid.id, fid.k)
}

/// An L-initial family together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInitialFamily {
    fid: FamilyId,
    size: Natural,
}

impl LInitialFamily {
    pub fn from_id(fid: FamilyId) -> Self {
        let size = size_from_id(&fid);
        LInitialFamily { fid, size }
    }

    /// `L([n], r, k)`, the first `r` members.
    pub fn from_size(n: usize, k: usize, r: &Natural) -> Result<Self> {
        check_uniformity(n, k)?;
        if r.is_zero() {
            return Ok(Self::from_id(FamilyId::empty(n, k)));
        }
        let last = lex_unrank(r, n, k)?;
        let fid = normalize_id(&last, k)?;
        Ok(LInitialFamily {
            fid,
            size: r.clone(),
        })
    }

    /// `L([n], A, k)` for any non-empty `A`.
    pub fn from_set(a: &KSet, k: usize) -> Result<Self> {
        Ok(Self::from_id(normalize_id(a, k)?))
    }

    pub fn id(&self) -> &FamilyId {
        &self.fid
    }

    pub fn size(&self) -> &Natural {
        &self.size
    }

    pub fn n(&self) -> usize {
        self.fid.n
    }

    pub fn k(&self) -> usize {
        self.fid.k
    }

    pub fn is_empty(&self) -> bool {
        self.size.is_zero()
    }

    /// Explicit members, in lex order.
    ///
    /// # Panics
    /// If the size does not fit in `usize`.
    pub fn members(&self) -> Vec<KSet> {
        let r = to_u64(&self.size).expect("family too large to list") as usize;
        enumerate_lex(self.n(), self.k()).take(r).collect()
    }

    /// `{[n] \ F : F ∈ self}`, an `(n-k)`-uniform family that is generally
    /// not L-initial.
    pub fn complement(&self) -> Vec<KSet> {
        complement_family(&self.members())
    }
}

/// The largest L-initial `b`-uniform family cross-intersecting
/// `L([n], P, a)`: its ID is the normalized partner of `P`. Empty iff
/// `min P > b`.
pub fn max_cross_id(p: &FamilyId, b: usize) -> Result<LInitialFamily> {
    let n = p.n;
    check_uniformity(n, b)?;
    if p.k + b > n {
        return Err(Error::Regime { a: p.k, b, n });
    }
    if p.is_empty_family() {
        return Err(Error::EmptySet);
    }
    let q = partner(&p.id)?;
    Ok(LInitialFamily::from_id(normalize_id(&q, b)?))
}

/// Size of [`max_cross_id`] straight from the elements of `P`:
/// `Σ_p C(n - a_p, b - a_p + p - 1)`.
pub fn max_cross_size(p: &FamilyId, b: usize) -> Natural {
    if p.is_empty_family() {
        return binomial(p.n as i64, b as i64);
    }
    partner_sum(&p.id, p.n, b)
}

/// Whether every member of `f` meets every member of `g`, decided by
/// comparing `|g|` with the largest L-initial family cross-intersecting `f`.
pub fn are_cross_intersecting(f: &LInitialFamily, g: &LInitialFamily) -> bool {
    if f.is_empty() || g.is_empty() {
        return true;
    }
    if f.k() + g.k() > f.n() {
        return true;
    }
    let cap = max_cross_id(f.id(), g.k()).expect("checked regime");
    g.size <= cap.size
}

/// Pairwise test over explicit member lists.
pub fn cross_intersecting_sets(a: &[KSet], b: &[KSet]) -> bool {
    a.iter().all(|x| b.iter().all(|y| x.intersects(y)))
}

/// Enumeration fallback for [`are_cross_intersecting`].
pub fn are_cross_intersecting_by_enumeration(f: &LInitialFamily, g: &LInitialFamily) -> bool {
    cross_intersecting_sets(&f.members(), &g.members())
}

pub fn complement_family(members: &[KSet]) -> Vec<KSet> {
    members.iter().map(KSet::complement).collect()
}

/// Sizes of all L-initial `k`-uniform families of `[n]`: `0..=C(n, k)`.
pub fn all_sizes(n: usize, k: usize) -> impl Iterator<Item = Natural> {
    let total = binomial(n as i64, k as i64);
    let mut r = Natural::zero();
    core::iter::from_fn(move || {
        if r > total {
            return None;
        }
        let cur = r.clone();
        r += Natural::one();
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kset::LexRelation;
    use alloc::vec;

    fn s(n: usize, e: &[usize]) -> KSet {
        KSet::new(n, e.to_vec()).unwrap()
    }

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    /// Brute force: count k-sets F with F ≺ A.
    fn downset_count(a: &KSet, k: usize) -> Natural {
        let c = enumerate_lex(a.n(), k)
            .filter(|f| crate::kset::lex_compare(f, a) == LexRelation::PrecedesOrEqual)
            .count();
        Natural::from(c)
    }

    fn all_nonempty_subsets(n: usize) -> impl Iterator<Item = KSet> {
        (1u32..(1 << n)).map(move |m| {
            KSet::from_sorted(n, (1..=n).filter(|x| m & (1 << (x - 1)) != 0).collect())
        })
    }

    #[test]
    fn partner_examples() {
        assert_eq!(partner(&s(5, &[1])).unwrap(), s(5, &[1]));
        assert_eq!(partner(&s(5, &[1, 3])).unwrap(), s(5, &[2, 3]));
        for k in 1..=6 {
            let a = KSet::interval(9, 2, k + 1);
            assert_eq!(partner(&a).unwrap(), s(9, &[1, k + 1]));
        }
        assert_eq!(partner(&KSet::empty(5)), Err(Error::EmptySet));
    }

    #[test]
    fn partner_is_involution_and_strongly_intersects() {
        for n in 1..=12 {
            for a in all_nonempty_subsets(n) {
                let b = partner(&a).unwrap();
                assert_eq!(partner(&b).unwrap(), a);
                let q = a.max().unwrap();
                assert_eq!(b.max(), Some(q));
                assert!((1..=q).all(|x| a.contains(x) || b.contains(x)));
                assert!((1..q).all(|x| !(a.contains(x) && b.contains(x))));
            }
        }
    }

    #[test]
    fn normalize_examples() {
        let (n, k) = (10, 4);
        // {1, n-k+2, ..., n} -> {1}
        let r0 = s(n, &[1, 8, 9, 10]);
        assert_eq!(normalize_id(&r0, k).unwrap().set(), &s(n, &[1]));
        // already canonical
        let a = s(n, &[2, 3, 4, 5]);
        assert_eq!(normalize_id(&a, k).unwrap().set(), &a);
        // |A| = k + 2
        let a = s(n, &[1, 2, 4, 5, 7, 9]);
        // a_k = 5, [5] \ A = {3}, j = 3
        let fid = normalize_id(&a, k).unwrap();
        assert_eq!(fid.set(), &s(n, &[1, 2, 3]));
        // whole family keeps its last member
        let all = KSet::interval(n, 7, 10);
        assert_eq!(normalize_id(&all, k).unwrap().set(), &all);
        // nothing precedes a proper superset of [k]
        let a = s(n, &[1, 2, 3, 4, 6]);
        assert!(normalize_id(&a, k).unwrap().is_empty_family());
        assert_eq!(normalize_id(&KSet::empty(n), k), Err(Error::EmptySet));
    }

    #[test]
    fn normalize_preserves_family_and_is_idempotent() {
        for n in 1..=8 {
            for k in 1..=n {
                for a in all_nonempty_subsets(n) {
                    let fid = normalize_id(&a, k).unwrap();
                    assert_eq!(size_from_id_direct(&fid), downset_count(&a, k), "{a} k={k}");
                    assert!(fid.set().len() <= k);
                    if !fid.is_empty_family() {
                        assert_eq!(normalize_id(fid.set(), k).unwrap(), fid);
                        let m = fid.set().max().unwrap();
                        let full = binomial(n as i64, k as i64);
                        assert!(m < n || size_from_id(&fid) == full, "{fid} n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn size_examples() {
        let f = |n, e: &[usize], k| normalize_id(&s(n, e), k).unwrap();
        for fid in [f(10, &[1], 4), f(10, &[2, 3, 4, 5], 4), f(6, &[1, 3], 3)] {
            assert_eq!(size_from_id(&fid), size_from_id_direct(&fid));
        }
        assert_eq!(size_from_id(&f(10, &[1], 4)), nat(84));
        assert_eq!(size_from_id(&f(10, &[2, 3, 4, 5], 4)), nat(85));
        assert_eq!(size_from_id(&f(6, &[1, 3], 3)), nat(7));
        assert_eq!(size_from_id_direct(&f(6, &[2], 2)), nat(9));
        for n in 3..=12usize {
            for k in 1..=n / 2 {
                for m in 1..=n - k {
                    let expect: Natural = (1..=m)
                        .map(|s| binomial((n - s) as i64, k as i64 - 1))
                        .sum();
                    let fid = normalize_id(&s(n, &[m]), k).unwrap();
                    assert_eq!(size_from_id_direct(&fid), expect);
                    assert_eq!(size_from_id(&fid), expect);
                }
            }
        }
    }

    #[test]
    fn size_formulas_agree_with_enumeration() {
        for n in 1..=10 {
            for k in 1..=n.min(5) {
                let members: Vec<KSet> = enumerate_lex(n, k).collect();
                for (r, last) in members.iter().enumerate() {
                    let fid = normalize_id(last, k).unwrap();
                    let expect = nat(r as u64 + 1);
                    assert_eq!(size_from_id(&fid), expect, "{fid} n={n} k={k}");
                    assert_eq!(size_from_id_direct(&fid), expect, "{fid} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn from_size_round_trip() {
        for n in 1..=8 {
            for k in 1..=n {
                for r in all_sizes(n, k) {
                    let fam = LInitialFamily::from_size(n, k, &r).unwrap();
                    assert_eq!(fam.size(), &r);
                    assert_eq!(LInitialFamily::from_id(fam.id().clone()).size(), &r);
                    if let Some(last) = fam.id().last_member() {
                        assert_eq!(fam.members().last(), Some(&last));
                    }
                }
            }
        }
    }

    #[test]
    fn max_cross_examples() {
        let (n, kt) = (12, 2);
        for b in 2..=5 {
            let star = normalize_id(&s(n, &[1]), 4).unwrap();
            let fam = max_cross_id(&star, b).unwrap();
            assert_eq!(fam.size(), &binomial(n as i64 - 1, b as i64 - 1));
            // P = {k_t} (padded) has partner [k_t]: everything containing [k_t]
            let p = normalize_id(&s(n, &[kt]), 4).unwrap();
            let fam = max_cross_id(&p, b).unwrap();
            assert_eq!(fam.size(), &binomial((n - kt) as i64, (b - kt) as i64));
            // min P > b: empty
            let p = normalize_id(&s(n, &[b + 1]), 4).unwrap();
            assert!(max_cross_id(&p, b).unwrap().is_empty());
        }
        let p = normalize_id(&s(6, &[1]), 4).unwrap();
        assert_eq!(max_cross_id(&p, 3), Err(Error::Regime { a: 4, b: 3, n: 6 }));
    }

    #[test]
    fn cross_intersection_examples() {
        let n = 8;
        let star = |k| LInitialFamily::from_set(&s(n, &[1]), k).unwrap();
        assert!(are_cross_intersecting(&star(3), &star(4)));
        let all3 = LInitialFamily::from_size(n, 3, &binomial(8, 3)).unwrap();
        let one = LInitialFamily::from_size(n, 4, &nat(1)).unwrap();
        assert!(!are_cross_intersecting(&all3, &one));
        assert!(!are_cross_intersecting_by_enumeration(&all3, &one));

        let f = LInitialFamily::from_set(&s(6, &[1, 3]), 3).unwrap();
        let g = LInitialFamily::from_set(&s(6, &[2, 3]), 3).unwrap();
        assert_eq!(f.size(), &nat(7));
        assert!(are_cross_intersecting_by_enumeration(&f, &g));
        assert!(are_cross_intersecting(&f, &g));
    }

    #[test]
    fn complement_examples() {
        let n = 6;
        let star = LInitialFamily::from_set(&s(n, &[1]), 2).unwrap();
        let comp = star.complement();
        let expect: Vec<KSet> = enumerate_lex(n, 4).filter(|f| !f.contains(1)).collect();
        let mut got = comp.clone();
        got.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(got, expect);

        let single = LInitialFamily::from_size(n, 2, &nat(1)).unwrap();
        assert_eq!(single.complement(), vec![KSet::interval(n, 3, n)]);

        let all = LInitialFamily::from_size(n, 2, &binomial(6, 2)).unwrap();
        let mut got = all.complement();
        got.sort_by(|a, b| a.lex_cmp(b));
        assert_eq!(got, enumerate_lex(n, 4).collect::<Vec<_>>());
    }

    #[test]
    fn max_cross_size_formula_matches_normalized_partner() {
        for n in 2..=10 {
            for a in 1..n {
                for b in 1..=n - a {
                    for r in all_sizes(n, a).skip(1) {
                        let p = LInitialFamily::from_size(n, a, &r).unwrap();
                        let fam = max_cross_id(p.id(), b).unwrap();
                        assert_eq!(&max_cross_size(p.id(), b), fam.size(), "{} a={a} b={b}", p.id());
                        assert_eq!(fam.is_empty(), p.id().set().min().unwrap() > b);
                    }
                }
            }
        }
    }
}
