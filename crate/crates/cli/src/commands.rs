//! Dispatch from parsed commands to core operations.

use rayon::prelude::*;
use serde_json::{json, Value};

use crossfam_core::bound::{theorem_bound, Branch};
use crossfam_core::extremal::extremal_configs;
use crossfam_core::kset::{lex_rank, lex_unrank};
use crossfam_core::lemmas::{
    reduction_chain, verify_down_up_runs, verify_increments, verify_local_convexity, verify_ridges,
};
use crossfam_core::objective::{endpoint_summary, f_eval, f_scan_range, id_space_len, index_dominance, ScanReport};
use crossfam_core::oracle::{linitial_search, micro_search_t2, pairwise_threshold_feasible};
use crossfam_core::{
    binomial, normalize_id, partner, size_from_id, size_from_id_direct, KSet, Natural, ProblemInstance,
};

use crate::cli::{Command, InstanceArgs};
use crate::report::{big, bigs, id, set, Check, Report, Table};
use crate::values;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}; required: k_1 ≥ … ≥ k_t, n ≥ k_1+k_2")]
    Instance(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] crossfam_core::Error),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        source: std::io::Error,
    },
}

/// ID-space offsets scanned per parallel task.
const SCAN_CHUNK: u64 = 2048;

pub fn instance(a: &InstanceArgs) -> Result<ProblemInstance, CliError> {
    ProblemInstance::new(a.n, a.ks.clone()).map_err(|e| CliError::Instance(e.to_string()))
}

fn check_i(p: &ProblemInstance, i: usize) -> Result<(), CliError> {
    p.check_index(i).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Bound { inst } => bound(&instance(inst)?),
        Command::FScan { inst, i, curve } => f_scan(&instance(inst)?, *i, *curve),
        Command::Lemmas { inst, i, all_i, depth } => lemmas(&instance(inst)?, *i, *all_i, *depth),
        Command::Oracle { inst, budget } => oracle(&instance(inst)?, *budget),
        Command::KkCheck { inst, budget } => kk_check(&instance(inst)?, *budget),
        Command::Extremal { inst } => extremal(&instance(inst)?),
        Command::Rank { n, k, set } => rank(*n, *k, set),
        Command::Unrank { n, k, rank } => unrank(*n, *k, rank),
        Command::Partner { n, set } => partner_cmd(*n, set),
        Command::Size { n, k, id } => size(*n, *k, id),
        Command::Suite { n_max, t_max } => crate::suite::run_suite(*n_max, *t_max),
    }
}

fn case_labels(p: &ProblemInstance, attaining: &[Branch]) -> Vec<&'static str> {
    let mut out: Vec<&'static str> = attaining
        .iter()
        .map(|b| match b {
            Branch::TSet => "star-T",
            Branch::Stars => "full-stars",
        })
        .collect();
    if p.degenerate() {
        out.push("complement-pair");
    }
    if p.all_equal() && p.n() == 2 * p.k(1) && p.t() >= 3 {
        out.push("equal-k-complement");
    }
    out
}

pub fn bound(p: &ProblemInstance) -> Result<Report, CliError> {
    let b = theorem_bound(p);
    let refs = values::references(p, &b.bound);
    let mut r = Report::new("bound", values::instance(p));
    for rf in &refs {
        let name = rf["name"].as_str().unwrap_or_default();
        match rf["consistent"].as_bool() {
            Some(ok) => r.checks.push(Check::new(
                format!("reference-{name}"),
                ok,
                format!("{} {} vs bound {}", rf["relation"].as_str().unwrap_or(""), compact(&rf["value"]), b.bound),
            )),
            None => r.checks.push(Check::skip(format!("reference-{name}"), "outside hypothesis")),
        }
    }
    let mut table = Table::new(&["branch", "value", "attains"]);
    for (br, v) in [Branch::TSet, Branch::Stars].iter().zip(&b.branch_values) {
        table.push(vec![br.label().into(), v.to_string(), b.attaining.contains(br).to_string()]);
    }
    r.results = json!({
        "branch_values": bigs(&b.branch_values),
        "bound": big(&b.bound),
        "attaining": b.attaining.iter().map(|x| x.label()).collect::<Vec<_>>(),
        "case_labels": case_labels(p, &b.attaining),
        "reference_bounds": refs,
    });
    r.table = Some(table);
    Ok(r)
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Parallel scan of one index, merged in rank order.
pub fn scan_index(p: &ProblemInstance, i: usize, with_curve: bool) -> Result<ScanReport, CliError> {
    let len = crossfam_core::binom::to_u64(&id_space_len(p, i))
        .ok_or_else(|| CliError::Usage("ID space too large to scan".into()))?;
    let starts: Vec<u64> = (0..len.max(1)).step_by(SCAN_CHUNK as usize).collect();
    let parts = starts
        .par_iter()
        .map(|&s| f_scan_range(p, i, s..s + SCAN_CHUNK, with_curve))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(parts
        .into_iter()
        .reduce(ScanReport::merge)
        .expect("at least one chunk"))
}

pub fn f_scan(p: &ProblemInstance, only: Option<usize>, curve: bool) -> Result<Report, CliError> {
    if let Some(i) = only {
        check_i(p, i)?;
    }
    let indices: Vec<usize> = only.map_or_else(|| (1..=p.t()).collect(), |i| vec![i]);
    let b = theorem_bound(p);
    let mut r = Report::new("f-scan", values::instance(p));
    r.instance["i"] = json!(only);
    let mut scans = Vec::new();
    let mut table = Table::new(&["i", "rank_offset", "id", "f"]);
    let mut overall: Option<Natural> = None;
    for &i in &indices {
        let s = scan_index(p, i, true)?;
        let sizes = match s.argmax.first() {
            Some((_, a)) => Some(bigs(&f_eval(p, i, a)?.per_family_sizes)),
            None => None,
        };
        let mut v = values::scan(&s, sizes);
        let e = endpoint_summary(p, &s)?;
        v["endpoints"] = json!({ "at_one": e.at_one, "at_m": e.at_m, "endpoints_only": e.endpoints_only });
        match e.endpoints_only {
            Some(ok) => r.checks.push(Check::new(
                format!("argmax-at-endpoints-i{i}"),
                ok,
                format!("argmax {:?} within {{1}}, {{{}}}", v["argmax_ids"], p.m(i)),
            )),
            None => r.checks.push(Check::skip(format!("argmax-at-endpoints-i{i}"), "degenerate instance")),
        }
        r.checks.push(Check::new(
            format!("max-vs-bound-i{i}"),
            e.bound_relation,
            format!("max {} {} bound {}", s.max_value, if i == 1 { "=" } else { "<=" }, b.bound),
        ));
        let curve_points = s.curve.as_deref().unwrap_or_default();
        for c in curve_points {
            table.push(vec![i.to_string(), c.rank_offset.to_string(), c.id.to_string(), c.f_value.to_string()]);
        }
        if curve {
            v["curve"] = Value::Array(
                curve_points
                    .iter()
                    .map(|c| json!({ "rank_offset": c.rank_offset, "id": id(&c.id), "f": big(&c.f_value) }))
                    .collect(),
            );
        }
        overall = Some(match overall {
            Some(m) if m >= s.max_value => m,
            _ => s.max_value.clone(),
        });
        scans.push(v);
    }
    if only.is_none() {
        let (checked, bad) = index_dominance(p)?;
        r.checks.push(Check::new(
            "index-one-dominates",
            bad.is_empty(),
            format!("{checked} comparisons, {} violations", bad.len()),
        ));
    }
    r.results = json!({
        "scans": scans,
        "max_over_scanned": overall.as_ref().map(big),
        "branch_values": bigs(&b.branch_values),
        "bound": big(&b.bound),
    });
    r.table = Some(table);
    Ok(r)
}

pub fn lemmas(p: &ProblemInstance, only: Option<usize>, all_i: bool, depth: Option<usize>) -> Result<Report, CliError> {
    if p.degenerate() {
        return Err(CliError::Usage(format!(
            "{p} is degenerate (t = 2, n = k_1+k_2); the lemmas assume n > k_1+k_2 or t > 2"
        )));
    }
    let indices: Vec<usize> = if all_i { (1..=p.t()).collect() } else { vec![only.unwrap_or(1)] };
    for &i in &indices {
        check_i(p, i)?;
        if let Some(j) = depth {
            if j >= p.k(i) {
                return Err(CliError::Usage(format!("depth {j} must be below k_{i} = {}", p.k(i))));
            }
        }
    }
    let mut r = Report::new("lemmas", values::instance(p));
    r.instance["i"] = json!(if all_i { None } else { Some(indices[0]) });
    r.instance["depth"] = json!(depth);
    let mut per_index = Vec::new();
    let mut table = Table::new(&["i", "depth", "triples_checked", "vacuous", "passed", "failed", "plateaus"]);
    for &i in &indices {
        let depths: Vec<usize> = depth.map_or_else(|| (0..p.k(i)).collect(), |j| vec![j]);
        let reports = depths
            .par_iter()
            .map(|&j| verify_local_convexity(p, i, j))
            .collect::<Result<Vec<_>, _>>()?;
        let mut conv = Vec::new();
        for c in &reports {
            let t = &c.tally;
            table.push(
                [i as u64, c.depth as u64, t.checked, t.vacuous, t.passed, t.failed, t.plateaus]
                    .iter()
                    .map(u64::to_string)
                    .collect(),
            );
            let mut v = values::tally(t);
            v["depth"] = json!(c.depth);
            conv.push(v);
            r.checks.push(Check::new(
                format!("local-convexity-i{i}-j{}", c.depth),
                t.ok(),
                format!("{} triples, {} vacuous, {} failed ({} plateaus)", t.checked, t.vacuous, t.failed, t.plateaus),
            ));
        }
        let ridges = verify_ridges(p, i)?;
        r.checks.push(match (&ridges.low, &ridges.high) {
            (None, None) => Check::skip(format!("ridges-i{i}"), "m < 2"),
            _ => Check::new(format!("ridges-i{i}"), ridges.ok(), "ridge implications"),
        });
        let chain = reduction_chain(p, i)?;
        for c in &chain {
            r.checks.push(match c.holds {
                Some(ok) => Check::new(format!("chain-{}-i{i}", c.name), ok, c.detail.clone()),
                None => Check::skip(format!("chain-{}-i{i}", c.name), c.detail.clone()),
            });
        }
        let runs = verify_down_up_runs(p, i)?;
        r.checks.push(Check::new(
            format!("down-up-runs-i{i}"),
            runs.violations.is_empty(),
            format!("{} maximal runs, {} down-up", runs.runs, runs.down_up),
        ));
        let inc = verify_increments(p, i)?;
        r.checks.push(Check::new(
            format!("increments-i{i}"),
            inc.ok(),
            format!(
                "{} pairs, {} consecutive, {} sequential; failures: telescoping {}, identity {}, closed form {}, invariance {}",
                inc.pairs, inc.consecutive, inc.sequential_pairs, inc.telescoping_failures,
                inc.identity_failures, inc.closed_form_failures, inc.invariance_failures
            ),
        ));
        per_index.push(json!({
            "i": i,
            "convexity": conv,
            "ridges": values::ridges(&ridges),
            "reduction_chain": chain.iter().map(values::named).collect::<Vec<_>>(),
            "runs": values::runs(&runs),
            "increments": values::increments(&inc),
        }));
    }
    r.results = json!({ "per_index": per_index });
    r.table = Some(table);
    Ok(r)
}

pub fn oracle(p: &ProblemInstance, budget: u64) -> Result<Report, CliError> {
    let res = linitial_search(p, budget)?;
    let b = theorem_bound(p);
    let mut r = Report::new("oracle", values::instance(p));
    r.instance["budget"] = json!(budget);
    r.checks.push(Check::new(
        "optimum-equals-bound",
        res.optimum == b.bound,
        format!("optimum {} vs bound {}", res.optimum, b.bound),
    ));
    let mut feasible = true;
    for w in &res.witnesses {
        feasible &= pairwise_threshold_feasible(w, p)?;
    }
    r.checks.push(Check::new(
        "witnesses-feasible",
        feasible,
        format!("{} witnesses, threshold test", res.witnesses.len()),
    ));
    let unlabelled = res.witness_cases.iter().filter(|c| c.is_empty()).count();
    r.checks.push(Check::new(
        "witnesses-labelled",
        unlabelled == 0,
        format!("{unlabelled} witnesses match no equality case"),
    ));
    let mut table = Table::new(&["witness", "family", "size", "id"]);
    for (w, (sizes, ids)) in res.witnesses.iter().zip(&res.ids).enumerate() {
        for (j, (s, fid)) in sizes.iter().zip(ids).enumerate() {
            table.push(vec![(w + 1).to_string(), (j + 1).to_string(), s.to_string(), fid.to_string()]);
        }
    }
    let mut v = values::oracle(&res);
    v["bound"] = big(&b.bound);
    r.results = v;
    r.table = Some(table);
    Ok(r)
}

pub fn kk_check(p: &ProblemInstance, budget: u64) -> Result<Report, CliError> {
    if p.t() != 2 {
        return Err(CliError::Usage(format!("kk-check needs t = 2, got t = {}", p.t())));
    }
    let micro = micro_search_t2(p.n(), p.k(1), p.k(2))?;
    let lin = linitial_search(p, budget)?;
    let b = theorem_bound(p);
    let mut r = Report::new("kk-check", values::instance(p));
    r.instance["budget"] = json!(budget);
    let micro_opt = Natural::from(micro.optimum);
    r.checks.push(Check::new(
        "unrestricted-equals-linitial",
        micro_opt == lin.optimum,
        format!("{} vs {}", micro.optimum, lin.optimum),
    ));
    r.checks.push(Check::new(
        "linitial-equals-bound",
        lin.optimum == b.bound,
        format!("{} vs {}", lin.optimum, b.bound),
    ));
    r.checks.push(Check::new(
        "shadow-caps",
        micro.kk_violations == 0,
        format!("{} optimal pairs checked, {} exceed the L-initial caps", micro.kk_checked, micro.kk_violations),
    ));
    r.results = json!({
        "unrestricted": values::micro(&micro),
        "linitial_optimum": big(&lin.optimum),
        "bound": big(&b.bound),
    });
    Ok(r)
}

pub fn extremal(p: &ProblemInstance) -> Result<Report, CliError> {
    let configs = extremal_configs(p)?;
    let b = theorem_bound(p);
    let mut r = Report::new("extremal", values::instance(p));
    let mut out = Vec::new();
    let mut table = Table::new(&["config", "case_label", "family", "k", "rule", "size"]);
    for (c_idx, c) in configs.iter().enumerate() {
        let v = c.verify(p);
        r.checks.push(Check::new(
            format!("config-{}-{}", c_idx + 1, c.case_label.label()),
            v.ok(),
            format!(
                "total {}, cross-intersecting {}, sizes match {}, achieves bound {}",
                v.total, v.cross_intersecting, v.sizes_match, v.achieves_bound
            ),
        ));
        let cv = values::config(c, &v, p.n());
        for (j, f) in cv["families"].as_array().into_iter().flatten().enumerate() {
            table.push(vec![
                (c_idx + 1).to_string(),
                c.case_label.label().into(),
                (j + 1).to_string(),
                f["k"].to_string(),
                compact(&f["rule"]),
                compact(&f["size"]),
            ]);
        }
        out.push(cv);
    }
    r.results = json!({
        "branch_values": bigs(&b.branch_values),
        "bound": big(&b.bound),
        "case_labels": configs.iter().map(|c| c.case_label.label()).collect::<std::collections::BTreeSet<_>>(),
        "configs": out,
    });
    r.table = Some(table);
    Ok(r)
}

fn parse_set(n: usize, s: &str) -> Result<KSet, CliError> {
    KSet::parse(n, s).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn rank(n: usize, k: usize, s: &str) -> Result<Report, CliError> {
    let a = parse_set(n, s)?;
    let rk = lex_rank(&a, n, k).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Report::new("rank", json!({ "n": n, "k": k, "set": set(&a) }));
    r.results = json!({ "rank": big(&rk), "total": big(&binomial(n as i64, k as i64)) });
    Ok(r)
}

pub fn unrank(n: usize, k: usize, rank: &str) -> Result<Report, CliError> {
    let rk: Natural = rank
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("rank {rank:?} is not a non-negative integer")))?;
    let a = lex_unrank(&rk, n, k).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Report::new("unrank", json!({ "n": n, "k": k, "rank": big(&rk) }));
    r.results = json!({ "set": set(&a) });
    Ok(r)
}

pub fn partner_cmd(n: usize, s: &str) -> Result<Report, CliError> {
    let a = parse_set(n, s)?;
    let b = partner(&a).map_err(|e| CliError::Usage(e.to_string()))?;
    let q = a.max().expect("partner needs a non-empty set");
    let mut r = Report::new("partner", json!({ "n": n, "set": set(&a) }));
    let ok = a.elements().iter().filter(|x| b.contains(**x)).eq([q].iter())
        && a.union(&b).elements().iter().copied().eq(1..=q);
    r.checks.push(Check::new("meets-in-max-with-union-interval", ok, format!("max {q}")));
    r.results = json!({ "partner": set(&b) });
    Ok(r)
}

pub fn size(n: usize, k: usize, s: &str) -> Result<Report, CliError> {
    let a = parse_set(n, s)?;
    let fid = normalize_id(&a, k).map_err(|e| CliError::Usage(e.to_string()))?;
    let recursive = size_from_id(&fid);
    let direct = size_from_id_direct(&fid);
    let mut r = Report::new("size", json!({ "n": n, "k": k, "id": set(&a) }));
    r.checks.push(Check::new(
        "formulas-agree",
        recursive == direct,
        format!("{recursive} vs {direct}"),
    ));
    r.results = json!({ "canonical_id": id(&fid), "size": big(&recursive) });
    Ok(r)
}
