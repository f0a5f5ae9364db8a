//! Closed-form maxima of `Σ |A_j|` and the classical bounds they specialize.

use alloc::vec::Vec;

use crate::binom::{binomial, Natural};
use crate::instance::ProblemInstance;

/// The two candidate extremal shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    /// `A_1` = sets meeting a `k_t`-set `T`, every other `A_j` = sets containing `T`:
    /// `C(n,k_1) - C(n-k_t,k_1) + Σ_{j>=2} C(n-k_t, k_j-k_t)`.
    TSet,
    /// Full stars at a common element: `Σ_j C(n-1, k_j-1)`.
    Stars,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::TSet => "t-set",
            Branch::Stars => "stars",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    /// `[TSet value, Stars value]`.
    pub branch_values: [Natural; 2],
    pub bound: Natural,
    /// Branches whose value equals the bound; both on a tie.
    pub attaining: Vec<Branch>,
}

pub fn t_set_value(inst: &ProblemInstance) -> Natural {
    let n = inst.n() as i64;
    let k1 = inst.k(1) as i64;
    let kt = inst.k(inst.t()) as i64;
    let rest: Natural = (2..=inst.t())
        .map(|j| binomial(n - kt, inst.k(j) as i64 - kt))
        .sum();
    binomial(n, k1) - binomial(n - kt, k1) + rest
}

pub fn stars_value(inst: &ProblemInstance) -> Natural {
    let n = inst.n() as i64;
    inst.ks()
        .iter()
        .map(|&k| binomial(n - 1, k as i64 - 1))
        .sum()
}

/// Maximum of `Σ |A_j|` over non-empty pairwise cross-intersecting
/// families: the larger of the two branch values.
pub fn theorem_bound(inst: &ProblemInstance) -> BoundResult {
    let a = t_set_value(inst);
    let b = stars_value(inst);
    let bound = if a >= b { a.clone() } else { b.clone() };
    let mut attaining = Vec::new();
    if a == bound {
        attaining.push(Branch::TSet);
    }
    if b == bound {
        attaining.push(Branch::Stars);
    }
    BoundResult {
        branch_values: [a, b],
        bound,
        attaining,
    }
}

/// How a reference bound relates to [`theorem_bound`] where it applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Must coincide exactly.
    Equal,
    /// Must be at least the theorem's bound.
    UpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceBound {
    pub name: &'static str,
    pub hypothesis: &'static str,
    /// `None` when the instance is outside the hypothesis.
    pub value: Option<Natural>,
    pub relation: Relation,
}

impl ReferenceBound {
    /// `None` when not applicable, otherwise whether the relation holds.
    pub fn consistent_with(&self, bound: &Natural) -> Option<bool> {
        self.value.as_ref().map(|v| match self.relation {
            Relation::Equal => v == bound,
            Relation::UpperBound => v >= bound,
        })
    }
}

/// Classical bounds, each evaluated only inside its own hypothesis.
pub fn reference_bounds(inst: &ProblemInstance) -> Vec<ReferenceBound> {
    let n = inst.n() as i64;
    let t = inst.t() as i64;
    let equal_k = inst.all_equal();
    let k = inst.k(1) as i64;
    let pair = inst.t() == 2;

    let hilton = (equal_k && n >= 2 * k).then(|| {
        if t * k <= n {
            binomial(n, k)
        } else {
            binomial(n - 1, k - 1) * Natural::from(t as u64)
        }
    });
    let hilton_milner =
        (pair && equal_k && n >= 2 * k).then(|| binomial(n, k) - binomial(n - k, k) + 1u32);
    let frankl_tokushige = pair.then(|| {
        let l = inst.k(2) as i64;
        binomial(n, k) - binomial(n - l, k) + 1u32
    });
    let borg_feghali = pair.then(|| {
        let (r, s) = (inst.k(2) as i64, k);
        let mut v = Natural::from(1u32);
        for i in 1..=s {
            v += binomial(n, i) - binomial(n - r, i);
        }
        v
    });
    let sfq_corollary = (equal_k && n >= 2 * k).then(|| {
        let a = binomial(n, k) - binomial(n - k, k) + Natural::from((t - 1) as u64);
        let b = binomial(n - 1, k - 1) * Natural::from(t as u64);
        a.max(b)
    });

    alloc::vec![
        ReferenceBound {
            name: "hilton",
            hypothesis: "k_1 = ... = k_t = k, n >= 2k (families may be empty)",
            value: hilton,
            relation: Relation::UpperBound,
        },
        ReferenceBound {
            name: "hilton-milner",
            hypothesis: "t = 2, k_1 = k_2 = k, n >= 2k",
            value: hilton_milner,
            relation: Relation::Equal,
        },
        ReferenceBound {
            name: "frankl-tokushige",
            hypothesis: "t = 2, n >= k_1 + k_2",
            value: frankl_tokushige,
            relation: Relation::Equal,
        },
        ReferenceBound {
            name: "borg-feghali",
            hypothesis: "t = 2, set sizes at most k_2 and at most k_1",
            value: borg_feghali,
            relation: Relation::UpperBound,
        },
        ReferenceBound {
            name: "shi-frankl-qian-corollary",
            hypothesis: "k_1 = ... = k_t = k, n >= 2k",
            value: sfq_corollary,
            relation: Relation::Equal,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn inst(n: usize, ks: &[usize]) -> ProblemInstance {
        ProblemInstance::new(n, ks.to_vec()).unwrap()
    }

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    #[test]
    fn examples() {
        let r = theorem_bound(&inst(9, &[4, 3, 2]));
        assert_eq!(r.branch_values, [nat(99), nat(92)]);
        assert_eq!(r.bound, nat(99));
        assert_eq!(r.attaining, vec![Branch::TSet]);

        let r = theorem_bound(&inst(4, &[2, 2]));
        assert_eq!(r.branch_values, [nat(6), nat(6)]);
        assert_eq!(r.attaining, vec![Branch::TSet, Branch::Stars]);
    }

    #[test]
    fn degenerate_pairs_tie_at_full_family() {
        for k1 in 1..=8usize {
            for k2 in 1..=k1 {
                let r = theorem_bound(&inst(k1 + k2, &[k1, k2]));
                let full = binomial((k1 + k2) as i64, k1 as i64);
                assert_eq!(r.branch_values, [full.clone(), full]);
            }
        }
    }

    #[test]
    fn hilton_milner_small() {
        let refs = reference_bounds(&inst(4, &[2, 2]));
        let hm = refs.iter().find(|b| b.name == "hilton-milner").unwrap();
        assert_eq!(hm.value, Some(nat(6)));
    }

    #[test]
    fn not_applicable_is_marked() {
        let refs = reference_bounds(&inst(9, &[4, 3, 2]));
        for b in &refs {
            assert!(b.value.is_none(), "{}", b.name);
        }
    }

    #[test]
    fn specializations_hold_on_grid() {
        for inst in ProblemInstance::grid(14, 2, 4) {
            let bound = theorem_bound(&inst).bound;
            for rb in reference_bounds(&inst) {
                assert_ne!(rb.consistent_with(&bound), Some(false), "{inst} {}", rb.name);
            }
        }
    }
}
