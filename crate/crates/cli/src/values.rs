//! JSON views of core results.

use serde_json::{json, Value};

use crossfam_core::bound::{reference_bounds, Relation};
use crossfam_core::extremal::{ExtremalConfig, Family, Method, Verification};
use crossfam_core::lemmas::{Counterexample, IncrementReport, NamedCheck, RidgeReport, RunsReport, Tally};
use crossfam_core::objective::ScanReport;
use crossfam_core::oracle::{MicroMethod, MicroResult, OracleResult};
use crossfam_core::ProblemInstance;

use crate::report::{big, bigs, id, set};

pub fn instance(p: &ProblemInstance) -> Value {
    json!({ "n": p.n(), "ks": p.ks() })
}

pub fn counterexample(c: &Counterexample) -> Value {
    json!({
        "c": c.c,
        "sets": c.sets.iter().map(set).collect::<Vec<_>>(),
        "f_values": bigs(&c.f_values),
    })
}

pub fn tally(t: &Tally) -> Value {
    json!({
        "triples_checked": t.checked,
        "vacuous": t.vacuous,
        "passed": t.passed,
        "failed": t.failed,
        "plateaus": t.plateaus,
        "counterexamples": t.counterexamples.iter().map(counterexample).collect::<Vec<_>>(),
    })
}

pub fn ridges(r: &RidgeReport) -> Value {
    json!({
        "low_chain": bigs(&r.low_chain),
        "high_chain": bigs(&r.high_chain),
        "low": r.low.as_ref().map(tally),
        "high": r.high.as_ref().map(tally),
    })
}

pub fn named(c: &NamedCheck) -> Value {
    json!({ "name": c.name, "holds": c.holds, "detail": c.detail })
}

pub fn runs(r: &RunsReport) -> Value {
    json!({
        "runs": r.runs,
        "down_up": r.down_up,
        "violations": r.violations.iter().map(|v| json!({
            "ids": v.ids.iter().map(set).collect::<Vec<_>>(),
            "f_values": bigs(&v.f_values),
        })).collect::<Vec<_>>(),
    })
}

pub fn increments(r: &IncrementReport) -> Value {
    json!({
        "pairs": r.pairs,
        "telescoping_failures": r.telescoping_failures,
        "identity_failures": r.identity_failures,
        "consecutive": r.consecutive,
        "closed_form_failures": r.closed_form_failures,
        "sequential_pairs": r.sequential_pairs,
        "invariance_failures": r.invariance_failures,
    })
}

pub fn scan(s: &ScanReport, per_family_sizes: Option<Value>) -> Value {
    json!({
        "i": s.i,
        "scanned": s.scanned,
        "max_value": big(&s.max_value),
        "argmax_ids": s.argmax.iter().map(|(_, a)| id(a)).collect::<Vec<_>>(),
        "argmax_rank_offsets": s.argmax.iter().map(|(o, _)| *o).collect::<Vec<_>>(),
        "per_family_sizes": per_family_sizes,
    })
}

pub fn references(p: &ProblemInstance, bound: &crossfam_core::Natural) -> Vec<Value> {
    reference_bounds(p)
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "hypothesis": r.hypothesis,
                "value": r.value.as_ref().map(big),
                "relation": match r.relation {
                    Relation::Equal => "equal",
                    Relation::UpperBound => "upper-bound",
                },
                "consistent": r.consistent_with(bound),
            })
        })
        .collect()
}

pub fn family(f: &Family, n: usize) -> Value {
    let rule = match f {
        Family::Meets { set: s, .. } => format!("meets {{{}}}", s.to_id_string()),
        Family::Contains { set: s, .. } => format!("contains {{{}}}", s.to_id_string()),
        Family::Star { element, .. } => format!("contains {element}"),
        Family::Majority { set: s, .. } => format!("at least two of {{{}}}", s.to_id_string()),
        Family::LInitial(l) => format!("L-initial with ID {{{}}}", l.id()),
        Family::AvoidComplements { of, .. } => {
            format!("complement not in [{}]", family(of, n)["rule"].as_str().unwrap_or(""))
        }
    };
    json!({ "k": f.k(), "rule": rule, "size": big(&f.size(n)) })
}

fn method(m: Method) -> &'static str {
    match m {
        Method::Enumeration => "enumeration",
        Method::SizeThreshold => "size-threshold",
        Method::Unverified => "unverified",
    }
}

pub fn verification(v: &Verification) -> Value {
    json!({
        "per_family_sizes": bigs(&v.sizes),
        "total": big(&v.total),
        "non_empty": v.non_empty,
        "cross_intersecting": v.cross_intersecting,
        "sizes_match": v.sizes_match,
        "achieves_bound": v.achieves_bound,
        "method": method(v.method),
    })
}

pub fn config(c: &ExtremalConfig, v: &Verification, n: usize) -> Value {
    json!({
        "case_label": c.case_label.label(),
        "families": c.witness.iter().map(|f| family(f, n)).collect::<Vec<_>>(),
        "verification": verification(v),
    })
}

pub fn oracle(r: &OracleResult) -> Value {
    json!({
        "optimum": big(&r.optimum),
        "complete": r.complete,
        "nodes": r.nodes,
        "witnesses": r.witnesses.iter().zip(&r.ids).zip(&r.witness_cases).map(|((w, ids), cases)| json!({
            "sizes": bigs(w),
            "ids": ids.iter().map(id).collect::<Vec<_>>(),
            "case_labels": cases.iter().map(|c| c.label()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "case_labels": r.matched_case.iter().map(|c| c.label()).collect::<Vec<_>>(),
    })
}

pub fn micro(r: &MicroResult) -> Value {
    json!({
        "optimum": r.optimum.to_string(),
        "method": match r.method {
            MicroMethod::Enumeration => "enumeration",
            MicroMethod::Matching => "matching",
        },
        "witness_sizes": r.witness_sizes.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
        "optimal_subsets": r.optimal_subsets.map(|x| x.to_string()),
        "kk_checked": r.kk_checked,
        "kk_violations": r.kk_violations,
    })
}
