//! Enumeration audits of the L-initial algebra.

use alloc::vec::Vec;

use crate::binom::Natural;
use crate::error::Result;
use crate::kset::{enumerate_lex, KSet};
use crate::linitial::{max_cross_size, normalize_id, size_from_id, size_from_id_direct, FamilyId};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Audit {
    pub checked: u64,
    pub failures: u64,
    /// First few failing cases, as text.
    pub examples: Vec<alloc::string::String>,
}

impl Audit {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> alloc::string::String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 8 {
                self.examples.push(what());
            }
        }
    }

    pub fn absorb(&mut self, other: Audit) {
        self.checked += other.checked;
        self.failures += other.failures;
        let room = 8usize.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

fn mask(s: &KSet) -> u64 {
    s.elements().iter().fold(0, |m, &x| m | 1 << (x - 1))
}

/// Canonical IDs of every non-empty `k`-uniform L-initial family, with the
/// member count obtained by walking the lex stream.
fn ids_with_counts(n: usize, k: usize) -> Result<Vec<(FamilyId, u64)>> {
    enumerate_lex(n, k)
        .enumerate()
        .map(|(p, last)| Ok((normalize_id(&last, k)?, p as u64 + 1)))
        .collect()
}

/// Both size formulas against the enumerated member count.
pub fn size_formula_audit(n: usize, k: usize) -> Result<Audit> {
    let mut audit = Audit::default();
    for (id, count) in ids_with_counts(n, k)? {
        let a = size_from_id(&id);
        let b = size_from_id_direct(&id);
        let c = Natural::from(count);
        audit.record(a == c && b == c, || alloc::format!("n={n} k={k} id={id}: {a} {b} vs {c}"));
    }
    Ok(audit)
}

/// For every non-empty `a`-uniform L-initial `F`: the largest `r` such that
/// the first `r` `b`-sets all meet every member of `F`, found by
/// enumeration, equals [`max_cross_size`]. This covers cross-intersection
/// of the partner family, failure once its lex successor is added, and
/// the emptiness criterion `min P <= b`.
pub fn max_cross_audit(n: usize, a: usize, b: usize) -> Result<Audit> {
    let xs: Vec<u64> = enumerate_lex(n, a).map(|s| mask(&s)).collect();
    let ys: Vec<u64> = enumerate_lex(n, b).map(|s| mask(&s)).collect();
    // first (1-based) a-set disjoint from each b-set
    let first_disjoint: Vec<usize> = ys
        .iter()
        .map(|&y| xs.iter().position(|&x| x & y == 0).map_or(usize::MAX, |p| p + 1))
        .collect();
    let mut audit = Audit::default();
    for (id, count) in ids_with_counts(n, a)? {
        let s = count as usize;
        let r = first_disjoint.iter().take_while(|&&p| p > s).count();
        let claimed = max_cross_size(&id, b);
        let empty_rule = id.set().min().expect("non-empty") <= b;
        audit.record(claimed == Natural::from(r) && empty_rule == (r > 0), || {
            alloc::format!("n={n} a={a} b={b} P={id}: claimed {claimed}, enumerated {r}")
        });
    }
    Ok(audit)
}

/// The threshold test gives the same verdict in both directions for every
/// pair of non-empty L-initial families.
pub fn symmetry_audit(n: usize, a: usize, b: usize) -> Result<Audit> {
    let fs = ids_with_counts(n, a)?;
    let gs = ids_with_counts(n, b)?;
    let f_caps: Vec<Natural> = fs.iter().map(|(id, _)| max_cross_size(id, b)).collect();
    let g_caps: Vec<Natural> = gs.iter().map(|(id, _)| max_cross_size(id, a)).collect();
    let mut audit = Audit::default();
    for (p, (_, sf)) in fs.iter().enumerate() {
        for (q, (_, sg)) in gs.iter().enumerate() {
            let forward = Natural::from(*sg) <= f_caps[p];
            let backward = Natural::from(*sf) <= g_caps[q];
            audit.record(forward == backward, || {
                alloc::format!("n={n} a={a} b={b} sizes {sf},{sg}: {forward} vs {backward}")
            });
        }
    }
    Ok(audit)
}
