//! Subsets of the ground set `[n] = {1, ..., n}` and the lexicographic
//! engine over them.
//!
//! The order used throughout is: `A ≺ B` iff `A ⊇ B` or
//! `min(A \ B) < min(B \ A)`. Equivalently, the smallest element of the
//! symmetric difference belongs to the set that comes first. On sets of
//! equal size this is ordinary lexicographic order of sorted sequences.

use core::cmp::Ordering;
use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::binom::{binomial, Natural};
use crate::error::{Error, Result};

/// A subset of `[n]`, kept as a strictly increasing sequence plus a dense
/// bitmask for intersection tests.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KSet {
    n: usize,
    elems: Vec<usize>,
    bits: Vec<u64>,
}

fn mask_of(n: usize, elems: &[usize]) -> Vec<u64> {
    let mut bits = vec![0u64; n.div_ceil(64).max(1)];
    for &x in elems {
        bits[(x - 1) / 64] |= 1u64 << ((x - 1) % 64);
    }
    bits
}

impl KSet {
    /// Validates that `elems` is strictly increasing inside `[1, n]`.
    pub fn new(n: usize, elems: Vec<usize>) -> Result<Self> {
        for w in elems.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::MalformedSet(format!(
                    "{:?} is not strictly increasing",
                    elems
                )));
            }
        }
        if let (Some(&lo), Some(&hi)) = (elems.first(), elems.last()) {
            if lo < 1 || hi > n {
                return Err(Error::MalformedSet(format!("{elems:?} not inside [1, {n}]")));
            }
        }
        Ok(Self::from_sorted(n, elems))
    }

    pub(crate) fn from_sorted(n: usize, elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elems.iter().all(|&x| 1 <= x && x <= n));
        let bits = mask_of(n, &elems);
        KSet { n, elems, bits }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    /// `{lo, lo + 1, ..., hi}`; empty when `lo > hi`.
    pub fn interval(n: usize, lo: usize, hi: usize) -> Self {
        Self::from_sorted(n, (lo..=hi).collect())
    }

    /// Parses `"a1,a2,..."`. The empty string is the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty(n));
        }
        let mut elems = Vec::new();
        for part in s.split(',') {
            let v = part
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::MalformedSet(format!("cannot parse {part:?}")))?;
            elems.push(v);
        }
        Self::new(n, elems)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn min(&self) -> Option<usize> {
        self.elems.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.elems.last().copied()
    }

    pub fn contains(&self, x: usize) -> bool {
        x >= 1 && x <= self.n && self.bits[(x - 1) / 64] & (1u64 << ((x - 1) % 64)) != 0
    }

    pub fn intersects(&self, other: &KSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn is_superset_of(&self, other: &KSet) -> bool {
        other.bits.iter().zip(&self.bits).all(|(b, a)| b & !a == 0)
    }

    /// `[n] \ self`.
    pub fn complement(&self) -> KSet {
        let elems = (1..=self.n).filter(|&x| !self.contains(x)).collect();
        Self::from_sorted(self.n, elems)
    }

    /// Elements of `self` not exceeding `bound`.
    pub fn truncated(&self, bound: usize) -> KSet {
        let elems = self.elems.iter().copied().filter(|&x| x <= bound).collect();
        Self::from_sorted(self.n, elems)
    }

    /// `self ∪ {x}`.
    pub fn with(&self, x: usize) -> KSet {
        let mut elems = self.elems.clone();
        if let Err(pos) = elems.binary_search(&x) {
            elems.insert(pos, x);
        }
        Self::from_sorted(self.n, elems)
    }

    pub fn union(&self, other: &KSet) -> KSet {
        let mut elems: Vec<usize> = self.elems.iter().chain(&other.elems).copied().collect();
        elems.sort_unstable();
        elems.dedup();
        Self::from_sorted(self.n.max(other.n), elems)
    }

    /// Comma-separated ascending elements, e.g. `"2,3,4"`.
    pub fn to_id_string(&self) -> String {
        let mut s = String::new();
        for (p, x) in self.elems.iter().enumerate() {
            if p > 0 {
                s.push(',');
            }
            s.push_str(&format!("{x}"));
        }
        s
    }

    /// Total order consistent with `≺`: `Less` means strictly precedes.
    pub fn lex_cmp(&self, other: &KSet) -> Ordering {
        let (a, b) = (&self.elems, &other.elems);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                // smallest element of the symmetric difference is in `a`
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
            }
        }
        match (i < a.len(), j < b.len()) {
            (false, false) => Ordering::Equal,
            // leftover elements only in `a`: a ⊋ b
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            (true, true) => unreachable!(),
        }
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_id_string())
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_id_string())
    }
}

/// Outcome of [`lex_compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LexRelation {
    PrecedesOrEqual,
    StrictlyFollows,
}

/// `A ≺ B` (reflexive).
pub fn lex_compare(a: &KSet, b: &KSet) -> LexRelation {
    match a.lex_cmp(b) {
        Ordering::Greater => LexRelation::StrictlyFollows,
        _ => LexRelation::PrecedesOrEqual,
    }
}

fn check_k_set(r: &KSet, n: usize, k: usize) -> Result<()> {
    if r.n() != n {
        return Err(Error::MalformedSet(format!(
            "set over [{}] used with ground set [{}]",
            r.n(),
            n
        )));
    }
    if r.len() != k {
        return Err(Error::WrongSize {
            expected: k,
            found: r.len(),
        });
    }
    Ok(())
}

/// 1-indexed position of the `k`-set `r` among all `k`-subsets of `[n]` in
/// lex order; equals `|{F : F ≺ r}|`.
pub fn lex_rank(r: &KSet, n: usize, k: usize) -> Result<Natural> {
    check_k_set(r, n, k)?;
    let mut rank = Natural::one();
    let mut prev = 0usize;
    for (p, &x) in r.elements().iter().enumerate() {
        // sets agreeing on the first p elements and taking y < x next
        for y in prev + 1..x {
            rank += binomial((n - y) as i64, (k - p - 1) as i64);
        }
        prev = x;
    }
    Ok(rank)
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(rank: &Natural, n: usize, k: usize) -> Result<KSet> {
    let total = binomial(n as i64, k as i64);
    if rank.is_zero() || *rank > total {
        return Err(Error::RankOutOfRange {
            rank: rank.clone(),
            total,
        });
    }
    let mut r = rank.clone();
    let mut elems = Vec::with_capacity(k);
    let mut x = 1usize;
    for p in 0..k {
        loop {
            let block = binomial((n - x) as i64, (k - p - 1) as i64);
            if r > block {
                r -= block;
                x += 1;
            } else {
                break;
            }
        }
        elems.push(x);
        x += 1;
    }
    Ok(KSet::from_sorted(n, elems))
}

/// All `k`-subsets of `[n]` in lex order.
pub fn enumerate_lex(n: usize, k: usize) -> LexIter {
    LexIter {
        n,
        k,
        next: if k <= n { Some((1..=k).collect()) } else { None },
    }
}

/// `k`-subsets of `[n]` from `start` (inclusive) onwards, in lex order.
pub fn enumerate_lex_from(start: &KSet) -> LexIter {
    LexIter {
        n: start.n(),
        k: start.len(),
        next: Some(start.elements().to_vec()),
    }
}

pub struct LexIter {
    n: usize,
    k: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for LexIter {
    type Item = KSet;

    fn next(&mut self) -> Option<KSet> {
        let cur = self.next.take()?;
        let (n, k) = (self.n, self.k);
        // rightmost position that can still move up
        let mut succ = cur.clone();
        let mut p = k;
        while p > 0 && succ[p - 1] == n - k + p {
            p -= 1;
        }
        if p > 0 {
            succ[p - 1] += 1;
            for q in p..k {
                succ[q] = succ[q - 1] + 1;
            }
            self.next = Some(succ);
        }
        Some(KSet::from_sorted(n, cur))
    }
}
