use crossfam_core::bound::theorem_bound;
use crossfam_core::extremal::CaseLabel;
use crossfam_core::objective::f_eval;
use crossfam_core::oracle::{
    linitial_search, micro_search_t2, pairwise_threshold_feasible, DEFAULT_BUDGET,
};
use crossfam_core::{binomial, Natural, ProblemInstance};

#[test]
fn oracle_equals_bound_up_to_eleven() {
    let grid = ProblemInstance::grid(11, 2, 3);
    assert!(grid.len() > 300, "{}", grid.len());
    for p in grid {
        let r = linitial_search(&p, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.optimum, theorem_bound(&p).bound, "{p}");
        assert!(r.complete);
        for (w, ids) in r.witnesses.iter().zip(&r.ids) {
            assert!(pairwise_threshold_feasible(w, &p).unwrap(), "{p} {w:?}");
            for i in 1..=p.t() {
                let m = p.m(i) as i64;
                let k = p.k(i) as i64;
                let cap: Natural = (1..=m).map(|s| binomial(p.n() as i64 - s, k - 1)).sum();
                assert!(w[i - 1] <= cap, "{p} i={i} {w:?}");
                if w[i - 1] >= binomial(p.n() as i64 - 1, k - 1) {
                    let total: Natural = w.iter().sum();
                    assert!(total <= f_eval(&p, i, &ids[i - 1]).unwrap().f_value, "{p} {w:?}");
                }
            }
        }
        assert!(r.witness_cases.iter().all(|c| !c.is_empty()), "{p} {:?}", r.witnesses);
        if p.degenerate() {
            let full = binomial(p.n() as i64, p.k(1) as i64);
            assert_eq!(Natural::from(r.witnesses.len()), full - 1u32, "{p}");
            assert!(r.matched_case.contains(&CaseLabel::ComplementPair));
        }
    }
}

#[test]
fn reduction_loses_nothing_for_pairs() {
    for n in 2..=7usize {
        for k1 in 1..=3usize {
            for k2 in 1..=k1 {
                if k1 + k2 > n {
                    continue;
                }
                let p = ProblemInstance::new(n, vec![k1, k2]).unwrap();
                let micro = micro_search_t2(n, k1, k2).unwrap();
                let lin = linitial_search(&p, DEFAULT_BUDGET).unwrap();
                assert_eq!(Natural::from(micro.optimum), lin.optimum, "{p}");
                assert_eq!(micro.kk_violations, 0, "{p}");
            }
        }
    }
}
