use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// `t` families over `[n]` with uniformities `k_1 >= k_2 >= ... >= k_t`.
///
/// Indices in the public API are 1-based, matching `A_1, ..., A_t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    n: usize,
    ks: Vec<usize>,
}

impl ProblemInstance {
    /// Requires `t >= 2`, `k_1 >= ... >= k_t >= 1` and `n >= k_1 + k_2`.
    pub fn new(n: usize, ks: Vec<usize>) -> Result<Self> {
        if ks.len() < 2 {
            return Err(Error::InvalidInstance(format!(
                "need t >= 2 families, got {}",
                ks.len()
            )));
        }
        if ks.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInstance(format!(
                "uniformities {ks:?} violate k_1 >= ... >= k_t"
            )));
        }
        if ks[ks.len() - 1] < 1 {
            return Err(Error::InvalidInstance("k_t >= 1 required".into()));
        }
        if n < ks[0] + ks[1] {
            return Err(Error::InvalidInstance(format!(
                "n >= k_1 + k_2 required, got n = {n} < {} + {}",
                ks[0], ks[1]
            )));
        }
        Ok(ProblemInstance { n, ks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.ks.len()
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    /// `k_i`, 1-based.
    pub fn k(&self, i: usize) -> usize {
        self.ks[i - 1]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.t() {
            return Err(Error::IndexOutOfRange { i, t: self.t() });
        }
        Ok(())
    }

    /// `t = 2` and `n = k_1 + k_2`.
    pub fn degenerate(&self) -> bool {
        self.t() == 2 && self.n == self.ks[0] + self.ks[1]
    }

    /// `m = min_{j != i} k_j`.
    pub fn m(&self, i: usize) -> usize {
        self.others(i).map(|j| self.k(j)).min().expect("t >= 2")
    }

    /// `l = max_{j != i} k_j`.
    pub fn l(&self, i: usize) -> usize {
        self.others(i).map(|j| self.k(j)).max().expect("t >= 2")
    }

    /// Indices `j != i`, ascending.
    pub fn others(&self, i: usize) -> impl Iterator<Item = usize> {
        (1..=self.t()).filter(move |&j| j != i)
    }

    pub fn all_equal(&self) -> bool {
        self.ks.iter().all(|&k| k == self.ks[0])
    }

    /// Every valid instance with `n <= n_max`, `t` in `t_range`, in a fixed
    /// order (n, then t, then ks in descending-lex order).
    pub fn grid(n_max: usize, t_min: usize, t_max: usize) -> Vec<ProblemInstance> {
        let mut out = Vec::new();
        for n in 2..=n_max {
            for t in t_min.max(2)..=t_max {
                let mut ks = Vec::new();
                push_descending(n, t, n, &mut ks, &mut out);
            }
        }
        out
    }
}

fn push_descending(
    n: usize,
    t: usize,
    cap: usize,
    ks: &mut Vec<usize>,
    out: &mut Vec<ProblemInstance>,
) {
    if ks.len() == t {
        if let Ok(inst) = ProblemInstance::new(n, ks.clone()) {
            out.push(inst);
        }
        return;
    }
    for k in (1..=cap).rev() {
        if ks.len() == 1 && ks[0] + k > n {
            continue;
        }
        ks.push(k);
        push_descending(n, t, k, ks, out);
        ks.pop();
    }
}

impl core::fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "n={} ks=(", self.n)?;
        for (p, k) in self.ks.iter().enumerate() {
            if p > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validation() {
        assert!(ProblemInstance::new(9, vec![4, 3, 2]).is_ok());
        assert!(ProblemInstance::new(6, vec![4, 3]).is_err());
        assert!(ProblemInstance::new(9, vec![3, 4]).is_err());
        assert!(ProblemInstance::new(9, vec![4]).is_err());
        assert!(ProblemInstance::new(9, vec![4, 0]).is_err());
    }

    #[test]
    fn accessors() {
        let inst = ProblemInstance::new(9, vec![4, 3, 2]).unwrap();
        assert_eq!((inst.m(1), inst.l(1)), (2, 3));
        assert_eq!((inst.m(3), inst.l(3)), (3, 4));
        assert!(!inst.degenerate());
        assert!(ProblemInstance::new(7, vec![4, 3]).unwrap().degenerate());
        assert!(!ProblemInstance::new(6, vec![3, 3, 3]).unwrap().degenerate());
    }

    #[test]
    fn grid_is_complete_and_valid() {
        let g = ProblemInstance::grid(6, 2, 3);
        // brute force count
        let mut count = 0;
        for n in 2..=6usize {
            for a in 1..=n {
                for b in 1..=a {
                    if a + b <= n {
                        count += 1;
                        count += (1..=b).count();
                    }
                }
            }
        }
        assert_eq!(g.len(), count);
        assert!(g.iter().all(|i| i.t() <= 3 && i.n() <= 6));
    }
}
