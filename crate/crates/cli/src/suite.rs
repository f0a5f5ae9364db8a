//! The acceptance suite: each criterion is one named check.
//!
//! Every criterion has its own instance grid; `n_max` and `t_max` cap them.

use rayon::prelude::*;
use serde_json::{json, Value};

use crossfam_core::bound::{reference_bounds, theorem_bound};
use crossfam_core::extremal::{extremal_configs, CaseLabel, Method};
use crossfam_core::lemmas::{reduction_chain, verify_increments, verify_local_convexity, verify_ridges, Tally};
use crossfam_core::objective::{endpoint_summary, f_eval, f_scan, index_dominance};
use crossfam_core::oracle::audit::{max_cross_audit, size_formula_audit, symmetry_audit, Audit};
use crossfam_core::oracle::{
    linitial_search, micro_search_t2, pairwise_threshold_feasible, MicroMethod, DEFAULT_BUDGET,
};
use crossfam_core::{binomial, Natural, ProblemInstance};

use crate::commands::CliError;
use crate::report::{Check, Report};
use crate::values;

/// Largest `n` per criterion, before capping by `n_max`.
pub const MAIN_N: usize = 11;
pub const ALGEBRA_N: usize = 10;
pub const ALGEBRA_K: usize = 5;
pub const DOMINANCE_N: usize = 11;
pub const LEMMA_N: usize = 10;
pub const LEMMA_K1: usize = 5;
pub const REDUCTION_N: usize = 7;
pub const REDUCTION_K: usize = 3;
pub const COMPLEMENT_N: usize = 8;
pub const REFERENCE_N: usize = 11;
/// Upper end of the number of families; the main grid starts at `t = 2`.
pub const SUITE_T: usize = 3;

pub const CHECK_NAMES: [&str; 9] = [
    "1-main-theorem",
    "2-size-formulas",
    "3-maximality",
    "4-dominance",
    "5-lemma-suite",
    "6-kk-reduction",
    "7-equality-cases",
    "8-reference-bounds",
    "9-determinism",
];

type Outcome = Result<(Value, bool, String), CliError>;

#[derive(Clone, Copy, Debug)]
struct Caps {
    n_max: usize,
    t_max: usize,
}

impl Caps {
    fn grid(&self, n: usize) -> Vec<ProblemInstance> {
        ProblemInstance::grid(n.min(self.n_max), 2, SUITE_T.min(self.t_max))
    }
}

fn spot(n: usize, ks: &[usize], want: u64, budget: u64) -> Result<(Value, bool), CliError> {
    let p = ProblemInstance::new(n, ks.to_vec())?;
    let got = linitial_search(&p, budget)?.optimum;
    let bound = theorem_bound(&p).bound;
    let ok = got == Natural::from(want) && bound == got;
    Ok((json!({ "instance": values::instance(&p), "oracle": got.to_string(), "bound": bound.to_string(), "expected": want.to_string() }), ok))
}

/// Equal-`k` families swapped pairwise; feasibility must not change.
fn permutation_stable(p: &ProblemInstance, w: &[Natural]) -> Result<bool, CliError> {
    let base = pairwise_threshold_feasible(w, p)?;
    for a in 0..p.t() {
        for b in a + 1..p.t() {
            if p.ks()[a] == p.ks()[b] {
                let mut v = w.to_vec();
                v.swap(a, b);
                if pairwise_threshold_feasible(&v, p)? != base {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Default)]
struct MainTally {
    instances: u64,
    mismatches: Vec<String>,
    witnesses: u64,
    witness_failures: Vec<String>,
}

fn main_one(p: &ProblemInstance) -> Result<MainTally, CliError> {
    let mut t = MainTally { instances: 1, ..Default::default() };
    let r = linitial_search(p, DEFAULT_BUDGET)?;
    if r.optimum != theorem_bound(p).bound || !r.complete {
        t.mismatches.push(format!("{p}: oracle {} complete {}", r.optimum, r.complete));
    }
    let n = p.n() as i64;
    for (w, ids) in r.witnesses.iter().zip(&r.ids) {
        t.witnesses += 1;
        let total: Natural = w.iter().sum();
        let mut ok = pairwise_threshold_feasible(w, p)? && permutation_stable(p, w)?;
        for i in 1..=p.t() {
            let k = p.k(i) as i64;
            let cap: Natural = (1..=p.m(i) as i64).map(|s| binomial(n - s, k - 1)).sum();
            ok &= w[i - 1] <= cap;
            if w[i - 1] >= binomial(n - 1, k - 1) {
                ok &= total <= f_eval(p, i, &ids[i - 1])?.f_value;
            }
        }
        if !ok {
            t.witness_failures.push(format!("{p} {w:?}"));
        }
    }
    if r.witness_cases.iter().any(|c| c.is_empty()) {
        t.witness_failures.push(format!("{p}: unlabelled witness"));
    }
    Ok(t)
}

fn criterion_main(caps: Caps) -> Outcome {
    let grid = caps.grid(MAIN_N);
    let parts = grid.par_iter().map(main_one).collect::<Result<Vec<_>, _>>()?;
    let mut all = MainTally::default();
    for t in parts {
        all.instances += t.instances;
        all.witnesses += t.witnesses;
        all.mismatches.extend(t.mismatches);
        all.witness_failures.extend(t.witness_failures);
    }
    let spots = [spot(4, &[2, 2], 6, DEFAULT_BUDGET)?, spot(9, &[4, 3, 2], 99, DEFAULT_BUDGET)?];
    let ok = all.mismatches.is_empty() && all.witness_failures.is_empty() && spots.iter().all(|s| s.1);
    let detail = format!(
        "{} instances, {} oracle/bound mismatches, {} witnesses, {} witness failures",
        all.instances,
        all.mismatches.len(),
        all.witnesses,
        all.witness_failures.len()
    );
    let v = json!({
        "instances": all.instances,
        "mismatches": first(&all.mismatches),
        "witnesses": all.witnesses,
        "witness_failures": first(&all.witness_failures),
        "spot_values": spots.iter().map(|s| s.0.clone()).collect::<Vec<_>>(),
    });
    Ok((v, ok, detail))
}

fn first(xs: &[String]) -> Vec<String> {
    xs.iter().take(8).cloned().collect()
}

fn audit_value(a: &Audit) -> Value {
    json!({ "checked": a.checked, "failures": a.failures, "examples": a.examples })
}

fn algebra_shapes(caps: Caps) -> Vec<(usize, usize)> {
    let n_top = ALGEBRA_N.min(caps.n_max);
    (1..=n_top)
        .flat_map(|n| (1..=ALGEBRA_K.min(n)).map(move |k| (n, k)))
        .collect()
}

fn criterion_sizes(caps: Caps) -> Outcome {
    let parts = algebra_shapes(caps)
        .par_iter()
        .map(|&(n, k)| size_formula_audit(n, k))
        .collect::<Result<Vec<_>, _>>()?;
    let mut a = Audit::default();
    parts.into_iter().for_each(|p| a.absorb(p));
    let detail = format!("{} canonical IDs, {} disagreements", a.checked, a.failures);
    Ok((audit_value(&a), a.ok(), detail))
}

fn criterion_maximality(caps: Caps) -> Outcome {
    let n_top = ALGEBRA_N.min(caps.n_max);
    let triples: Vec<(usize, usize, usize)> = (2..=n_top)
        .flat_map(|n| (1..n).flat_map(move |a| (1..=n - a).map(move |b| (n, a, b))))
        .collect();
    let parts = triples
        .par_iter()
        .map(|&(n, a, b)| Ok((max_cross_audit(n, a, b)?, symmetry_audit(n, a, b)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let (mut tight, mut sym) = (Audit::default(), Audit::default());
    for (t, s) in parts {
        tight.absorb(t);
        sym.absorb(s);
    }
    let detail = format!(
        "{} (P, b) cases, {} failures; {} threshold pairs, {} asymmetric",
        tight.checked, tight.failures, sym.checked, sym.failures
    );
    Ok((
        json!({ "tightness": audit_value(&tight), "threshold_symmetry": audit_value(&sym) }),
        tight.ok() && sym.ok(),
        detail,
    ))
}

fn dominance_one(p: &ProblemInstance) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let mut scans = 0;
    for i in 1..=p.t() {
        let s = f_scan(p, i, false)?;
        let e = endpoint_summary(p, &s)?;
        scans += 1;
        if e.endpoints_only != Some(true) || !e.bound_relation {
            let ids: Vec<String> = s.argmax.iter().map(|(_, a)| a.to_string()).collect();
            bad.push(format!("{p} i={i}: argmax {ids:?}, max {}", s.max_value));
        }
    }
    let (_, v) = index_dominance(p)?;
    for d in v {
        bad.push(format!("{p}: f_1({{{}}}) = {} < f_{}({{{}}}) = {}", d.s, d.f_first, d.j, d.s, d.f_other));
    }
    Ok((scans, bad))
}

fn criterion_dominance(caps: Caps) -> Outcome {
    let grid: Vec<_> = caps.grid(DOMINANCE_N).into_iter().filter(|p| !p.degenerate()).collect();
    let parts = grid.par_iter().map(dominance_one).collect::<Result<Vec<_>, _>>()?;
    let scans: u64 = parts.iter().map(|p| p.0).sum();
    let bad: Vec<String> = parts.into_iter().flat_map(|p| p.1).collect();
    let detail = format!("{} instances, {scans} scans, {} violations", grid.len(), bad.len());
    Ok((json!({ "instances": grid.len(), "scans": scans, "violations": first(&bad) }), bad.is_empty(), detail))
}

/// `t >= 3` and `n = k_i + max_{j != i} k_j`.
pub fn convexity_boundary(p: &ProblemInstance, i: usize) -> bool {
    p.t() >= 3 && p.n() == p.k(i) + p.l(i)
}

#[derive(Default)]
struct LemmaTally {
    convexity: Tally,
    off_boundary_failures: u64,
    boundary_failures: u64,
    ridge_failures: Vec<String>,
    chain_checked: u64,
    chain_failures: Vec<String>,
    consecutive: u64,
    closed_form_failures: u64,
    increment_failures: Vec<String>,
}

fn lemma_one(p: &ProblemInstance) -> Result<LemmaTally, CliError> {
    let mut t = LemmaTally::default();
    for i in 1..=p.t() {
        for j in 0..p.k(i) {
            let c = verify_local_convexity(p, i, j)?;
            if convexity_boundary(p, i) {
                t.boundary_failures += c.tally.failed;
            } else {
                t.off_boundary_failures += c.tally.failed;
            }
            t.convexity.absorb(c.tally);
        }
        if !verify_ridges(p, i)?.ok() {
            t.ridge_failures.push(format!("{p} i={i}"));
        }
        for c in reduction_chain(p, i)? {
            if c.holds.is_some() {
                t.chain_checked += 1;
            }
            if c.holds == Some(false) {
                t.chain_failures.push(format!("{p} i={i} {}: {}", c.name, c.detail));
            }
        }
        let inc = verify_increments(p, i)?;
        t.consecutive += inc.consecutive;
        t.closed_form_failures += inc.closed_form_failures;
        if !inc.ok() {
            t.increment_failures.push(format!("{p} i={i} {inc:?}"));
        }
    }
    Ok(t)
}

fn criterion_lemmas(caps: Caps) -> Outcome {
    let grid: Vec<_> = caps
        .grid(LEMMA_N)
        .into_iter()
        .filter(|p| p.k(1) <= LEMMA_K1 && !p.degenerate())
        .collect();
    let parts = grid.par_iter().map(lemma_one).collect::<Result<Vec<_>, _>>()?;
    let mut all = LemmaTally::default();
    for t in parts {
        all.convexity.absorb(t.convexity);
        all.off_boundary_failures += t.off_boundary_failures;
        all.boundary_failures += t.boundary_failures;
        all.ridge_failures.extend(t.ridge_failures);
        all.chain_checked += t.chain_checked;
        all.chain_failures.extend(t.chain_failures);
        all.consecutive += t.consecutive;
        all.closed_form_failures += t.closed_form_failures;
        all.increment_failures.extend(t.increment_failures);
    }
    let c = &all.convexity;
    let ok = c.ok()
        && all.ridge_failures.is_empty()
        && all.chain_failures.is_empty()
        && all.increment_failures.is_empty();
    let detail = format!(
        "local convexity: {} of {} triples fail ({} exact plateaus, {} off the t >= 3, n = k_i + l boundary); \
         ridges: {} failures; chain: {} of {} fail; beta closed form: {} of {} consecutive pairs fail",
        c.failed,
        c.checked,
        c.plateaus,
        all.off_boundary_failures,
        all.ridge_failures.len(),
        all.chain_failures.len(),
        all.chain_checked,
        all.closed_form_failures,
        all.consecutive
    );
    let v = json!({
        "instances": grid.len(),
        "convexity": values::tally(c),
        "convexity_boundary_failures": all.boundary_failures,
        "convexity_off_boundary_failures": all.off_boundary_failures,
        "ridge_failures": first(&all.ridge_failures),
        "chain_checked": all.chain_checked,
        "chain_failures": first(&all.chain_failures),
        "beta_consecutive_pairs": all.consecutive,
        "beta_closed_form_failures": all.closed_form_failures,
        "increment_failures": first(&all.increment_failures),
    });
    Ok((v, ok, detail))
}

fn criterion_reduction(caps: Caps) -> Outcome {
    let n_top = REDUCTION_N.min(caps.n_max);
    let mut pairs = Vec::new();
    for n in 2..=n_top {
        for k1 in 1..=REDUCTION_K {
            for k2 in 1..=k1 {
                if k1 + k2 <= n {
                    pairs.push(ProblemInstance::new(n, vec![k1, k2])?);
                }
            }
        }
    }
    let rows = pairs
        .par_iter()
        .map(|p| {
            let micro = micro_search_t2(p.n(), p.k(1), p.k(2))?;
            let lin = linitial_search(p, DEFAULT_BUDGET)?;
            let ok = Natural::from(micro.optimum) == lin.optimum && micro.kk_violations == 0;
            Ok((p.to_string(), micro.optimum, lin.optimum, micro.method, ok))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.4)
        .map(|r| format!("{}: unrestricted {} vs L-initial {}", r.0, r.1, r.2))
        .collect();
    let matching = rows.iter().filter(|r| r.3 == MicroMethod::Matching).count();
    let detail = format!(
        "{} pair instances ({} by matching), {} mismatches",
        rows.len(),
        matching,
        bad.len()
    );
    Ok((json!({ "instances": rows.len(), "by_matching": matching, "mismatches": bad }), bad.is_empty(), detail))
}

fn configs_one(p: &ProblemInstance) -> Result<(u64, Vec<String>), CliError> {
    let mut bad = Vec::new();
    let configs = extremal_configs(p)?;
    for c in &configs {
        let v = c.verify(p);
        if !v.ok() || v.method != Method::Enumeration {
            bad.push(format!("{p} {}: {v:?}", c.case_label.label()));
        }
    }
    Ok((configs.len() as u64, bad))
}

fn complement_one(p: &ProblemInstance) -> Result<Vec<String>, CliError> {
    let mut bad = Vec::new();
    let full = binomial(p.n() as i64, p.k(1) as i64);
    let r = linitial_search(p, DEFAULT_BUDGET)?;
    if Natural::from(r.witnesses.len()) != &full - 1u32
        || r.witness_cases.iter().any(|c| !c.contains(&CaseLabel::ComplementPair))
    {
        bad.push(format!("{p}: {} L-initial witnesses", r.witnesses.len()));
    }
    let micro = micro_search_t2(p.n(), p.k(1), p.k(2))?;
    if Natural::from(micro.optimum) != full {
        bad.push(format!("{p}: unrestricted optimum {}", micro.optimum));
    }
    if let Some(optimal) = micro.optimal_subsets {
        // every non-empty proper subset of the smaller side, with its closure
        let side = binomial(p.n() as i64, p.k(2) as i64).min(full.clone());
        let expected = (Natural::from(1u32) << crossfam_core::binom::to_u64(&side).unwrap_or(0)) - 2u32;
        if Natural::from(optimal) != expected {
            bad.push(format!("{p}: {optimal} optimal subsets, expected {expected}"));
        }
    }
    Ok(bad)
}

fn criterion_equality(caps: Caps) -> Outcome {
    let grid = caps.grid(MAIN_N);
    let parts = grid.par_iter().map(configs_one).collect::<Result<Vec<_>, _>>()?;
    let configs: u64 = parts.iter().map(|p| p.0).sum();
    let mut bad: Vec<String> = parts.into_iter().flat_map(|p| p.1).collect();
    let degenerate: Vec<_> = caps
        .grid(COMPLEMENT_N)
        .into_iter()
        .filter(ProblemInstance::degenerate)
        .collect();
    let comp = degenerate.par_iter().map(complement_one).collect::<Result<Vec<_>, _>>()?;
    let comp_bad: Vec<String> = comp.into_iter().flatten().collect();
    let detail = format!(
        "{configs} witness configs on {} instances, {} not verified by enumeration; \
         {} complement regimes, {} failures",
        grid.len(),
        bad.len(),
        degenerate.len(),
        comp_bad.len()
    );
    let ok = bad.is_empty() && comp_bad.is_empty();
    bad.truncate(8);
    Ok((
        json!({
            "configs": configs,
            "config_failures": bad,
            "complement_regimes": degenerate.len(),
            "complement_failures": first(&comp_bad),
        }),
        ok,
        detail,
    ))
}

fn criterion_references(caps: Caps) -> Outcome {
    let grid = caps.grid(REFERENCE_N);
    let mut applied = std::collections::BTreeMap::<&str, u64>::new();
    let mut bad = Vec::new();
    for p in &grid {
        let b = theorem_bound(p).bound;
        for r in reference_bounds(p) {
            if let Some(ok) = r.consistent_with(&b) {
                *applied.entry(r.name).or_default() += 1;
                if !ok {
                    bad.push(format!("{p} {}: {:?} vs {b}", r.name, r.value));
                }
            }
        }
    }
    let detail = format!(
        "{} instances, {} applications, {} inconsistencies",
        grid.len(),
        applied.values().sum::<u64>(),
        bad.len()
    );
    Ok((json!({ "instances": grid.len(), "applied": applied, "inconsistencies": first(&bad) }), bad.is_empty(), detail))
}

fn pass(caps: Caps) -> Result<(Vec<Value>, Vec<Check>), CliError> {
    let criteria: [fn(Caps) -> Outcome; 8] = [
        criterion_main,
        criterion_sizes,
        criterion_maximality,
        criterion_dominance,
        criterion_lemmas,
        criterion_reduction,
        criterion_equality,
        criterion_references,
    ];
    let mut results = Vec::new();
    let mut checks = Vec::new();
    for (name, f) in CHECK_NAMES.iter().zip(criteria) {
        let (mut v, ok, detail) = f(caps)?;
        v["name"] = json!(name);
        results.push(v);
        checks.push(Check::new(*name, ok, detail));
    }
    Ok((results, checks))
}

fn assemble(caps: Caps, results: Vec<Value>, checks: Vec<Check>) -> Report {
    let mut r = Report::new("suite", json!({ "n_max": caps.n_max, "t_max": caps.t_max }));
    r.results = json!({ "criteria": results });
    r.checks = checks;
    r
}

/// Runs criteria 1-8 twice; the second pass must reproduce the first byte
/// for byte, which is criterion 9.
pub fn run_suite(n_max: usize, t_max: usize) -> Result<Report, CliError> {
    if n_max < 2 || t_max < 2 {
        return Err(CliError::Usage("suite needs --n-max >= 2 and --t-max >= 2".into()));
    }
    let caps = Caps { n_max, t_max };
    let (results, checks) = pass(caps)?;
    let (again, again_checks) = pass(caps)?;
    let first_bytes = assemble(caps, results.clone(), checks.clone()).canonical_bytes();
    let second_bytes = assemble(caps, again, again_checks).canonical_bytes();
    let same = first_bytes == second_bytes;
    let mut checks = checks;
    checks.push(Check::new(
        CHECK_NAMES[8],
        same,
        format!("two passes, {} report bytes, identical: {same}", first_bytes.len()),
    ));
    let mut results = results;
    results.push(json!({ "name": CHECK_NAMES[8], "bytes": first_bytes.len(), "identical": same }));
    Ok(assemble(caps, results, checks))
}
