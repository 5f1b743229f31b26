use std::path::Path;

use serde_json::{json, Value};

use trifree_core::cut::{
    check_lemma_5_1, cut_profile, promote_cut, verify_main_chain, whp_diagnostics, Cut, DiagnosticsOptions,
    ParamConfig, ParamValues,
};
use trifree_core::experiments::{
    auto_grid, geometric_grid, obstruction_witness, sweep_with, threshold_crossing_with, threshold_scale,
    write_sweep_csv, Mode, ThresholdOptions, TrialSettings,
};
use trifree_core::graph::{read_graph, sample_gnp, to_edge_list, GnpSpec};
use trifree_core::homology::{
    betti_z2_with, check_theorem_6_2_with, homology_profile, kahle_sweep, write_kahle_csv, HomologyLimits,
};
use trifree_core::solve::{
    all_max_triangle_free_bipartite_with, max_cut_with, max_kr_free_with, max_multipartite_with,
    max_triangle_free_with, Limits, Verdict, Witness,
};
use trifree_core::{EdgeSet, Graph};

use crate::args::*;
use crate::error::CliError;

pub enum Payload {
    Json(Value),
    Csv(Vec<u8>),
    EdgeList(String),
}

pub struct Outcome {
    pub payload: Payload,
    pub summary: String,
    pub extra: Option<Value>,
}

impl Outcome {
    fn json(value: Value, summary: String) -> Self {
        Outcome {
            payload: Payload::Json(value),
            summary,
            extra: None,
        }
    }
}

/// Validated constants from defaults, then `--config`, then flags.
pub fn param_values(g: &Global) -> Result<ParamValues, CliError> {
    let mut values = serde_json::to_value(ParamValues::default())?;
    if let Some(path) = &g.config {
        let text = std::fs::read_to_string(path)?;
        let doc: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let Value::Object(map) = doc else {
            return Err(CliError::Usage(format!("{}: expected a JSON object", path.display())));
        };
        for (k, v) in map {
            values[k.as_str()] = v;
        }
    }
    let mut v: ParamValues = serde_json::from_value(values).map_err(|e| CliError::Usage(format!("config: {e}")))?;
    let overrides = [
        (&mut v.epsilon, g.epsilon),
        (&mut v.eta, g.eta),
        (&mut v.alpha, g.alpha),
        (&mut v.c, g.c),
        (&mut v.k, g.k_const),
        (&mut v.zeta, g.zeta),
    ];
    for (slot, flag) in overrides {
        if let Some(x) = flag {
            *slot = x;
        }
    }
    ParamConfig::new(v)?;
    Ok(v)
}

pub fn limits(g: &Global, base: Limits) -> Limits {
    Limits {
        work_budget: g.work_budget.unwrap_or(base.work_budget),
        node_budget: g.node_budget.unwrap_or(base.node_budget),
        optima_cap: g.optima_cap.unwrap_or(base.optima_cap),
        ..base
    }
}

/// Limits in force for one subcommand: trial budgets for the Monte Carlo
/// commands, unbounded work otherwise.
pub fn limits_for(command: &Command, g: &Global) -> Limits {
    let base = match command {
        Command::Sweep(_) | Command::Threshold(_) => TrialSettings::default().limits,
        _ => Limits::default(),
    };
    limits(g, base)
}

fn load(path: &Path) -> Result<Graph, CliError> {
    read_graph(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn pairs(g: &Graph, set: &EdgeSet) -> Vec<[usize; 2]> {
    set.iter()
        .map(|i| {
            let (u, v) = g.edge(i);
            [u, v]
        })
        .collect()
}

fn verdict_json(g: &Graph, v: &Verdict) -> Value {
    match v {
        Verdict::AllBipartite { optima_enumerated } => {
            json!({"kind": "all_bipartite", "optima_enumerated": optima_enumerated})
        }
        Verdict::NonBipartiteOptimumFound(edges) => {
            json!({"kind": "non_bipartite_optimum", "edges": pairs(g, edges)})
        }
        Verdict::Inconclusive { optima_enumerated, reason } => {
            json!({"kind": "inconclusive", "optima_enumerated": optima_enumerated, "reason": format!("{reason:?}")})
        }
    }
}

fn witness_json(g: &Graph, w: &Witness) -> Value {
    match w {
        Witness::Edges(e) => json!(pairs(g, e)),
        Witness::Cut(c) => json!(c.side_a().to_vec()),
        Witness::Partition(p) => json!(p),
    }
}

/// `auto`, `geom:LO:HI:POINTS`, or comma-separated values.
pub fn parse_grid(spec: &str, auto: impl FnOnce() -> Result<Vec<f64>, CliError>) -> Result<Vec<f64>, CliError> {
    let spec = spec.trim();
    if spec == "auto" {
        return auto();
    }
    if let Some(rest) = spec.strip_prefix("geom:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let bad = || CliError::Usage(format!("grid {spec:?}: expected geom:LO:HI:POINTS"));
        let [lo, hi, points] = parts[..] else { return Err(bad()) };
        let lo: f64 = lo.parse().map_err(|_| bad())?;
        let hi: f64 = hi.parse().map_err(|_| bad())?;
        let points: usize = points.parse().map_err(|_| bad())?;
        return geometric_grid(lo, hi, points).map_err(|e| CliError::Usage(e.to_string()));
    }
    let grid = spec
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("grid value {s:?} is not a number"))))
        .collect::<Result<Vec<_>, _>>()?;
    if grid.is_empty() {
        return Err(CliError::Usage("empty grid".into()));
    }
    Ok(grid)
}

pub fn sample(a: &SampleArgs) -> Result<Outcome, CliError> {
    let g = sample_gnp(GnpSpec::new(a.n, a.p, a.seed)?)?;
    Ok(Outcome {
        summary: format!("sampled G({}, {}) seed {}: {} edges", a.n, a.p, a.seed, g.edge_count()),
        payload: Payload::EdgeList(to_edge_list(&g)),
        extra: Some(json!({"n": a.n, "m": g.edge_count()})),
    })
}

pub fn solve(a: &SolveArgs, limits: &Limits) -> Result<Outcome, CliError> {
    let g = load(&a.graph)?;
    let mut out = json!({"n": g.vertex_count(), "m": g.edge_count()});
    let mut summary = vec![format!("n={} m={}", g.vertex_count(), g.edge_count())];
    let want = |q: Quantity| a.what.contains(&q);
    let mut t = None;
    if want(Quantity::Verdict) {
        let cert = all_max_triangle_free_bipartite_with(&g, limits)?;
        t = Some(cert.optimum);
        out["t"] = json!(cert.optimum);
        out["t_witness"] = witness_json(&g, &cert.witness);
        out["verdict"] = verdict_json(&g, cert.verdict.as_ref().expect("verdict"));
        summary.push(format!("verdict={}", out["verdict"]["kind"].as_str().unwrap()));
    } else if want(Quantity::T) {
        let cert = max_triangle_free_with(&g, limits)?;
        t = Some(cert.optimum);
        out["t"] = json!(cert.optimum);
        out["t_witness"] = witness_json(&g, &cert.witness);
    }
    if let Some(t) = t {
        summary.push(format!("t={t}"));
    }
    if want(Quantity::B) {
        let cert = max_cut_with(&g, limits)?;
        out["b"] = json!(cert.optimum);
        out["b_witness"] = witness_json(&g, &cert.witness);
        summary.push(format!("b={}", cert.optimum));
        if let Some(t) = t {
            out["t_equals_b"] = json!(t == cert.optimum);
        }
    }
    if want(Quantity::Tr) || want(Quantity::Br) {
        if a.r < 3 {
            return Err(CliError::Usage(format!("--r {} must be at least 3", a.r)));
        }
        out["r"] = json!(a.r);
    }
    if want(Quantity::Tr) {
        let cert = max_kr_free_with(&g, a.r, limits)?;
        out["tr"] = json!(cert.optimum);
        out["tr_witness"] = witness_json(&g, &cert.witness);
        summary.push(format!("t_{}={}", a.r, cert.optimum));
    }
    if want(Quantity::Br) {
        let cert = max_multipartite_with(&g, a.r - 1, limits)?;
        out["br"] = json!(cert.optimum);
        out["br_witness"] = witness_json(&g, &cert.witness);
        summary.push(format!("b_{}={}", a.r, cert.optimum));
    }
    Ok(Outcome::json(out, summary.join(" ")))
}

pub fn analyze_cut(a: &AnalyzeCutArgs, cfg: &ParamConfig, limits: &Limits) -> Result<Outcome, CliError> {
    let g = load(&a.graph)?;
    let n = g.vertex_count();
    let pi = match &a.side_a {
        Some(side) => {
            if let Some(&v) = side.iter().find(|&&v| v >= n) {
                return Err(CliError::Usage(format!("vertex {v} out of range for n = {n}")));
            }
            Cut::from_side_a(n, side.iter().copied())
        }
        None => max_cut_with(&g, limits)?.witness.as_cut().expect("cut witness").clone(),
    };
    let profile = cut_profile(&g, &pi, cfg, a.p)?;
    let (_, promotion) = promote_cut(&g, &pi, cfg, a.p)?;
    let mut out = json!({
        "n": n,
        "p": a.p,
        "side_a": pi.side_a().to_vec(),
        "cut_size": pi.size(&g),
        "balanced": pi.is_balanced(cfg.eta()),
        "profile": profile,
        "promotion": promotion,
    });
    let mut summary = format!(
        "|A|={} |X|={} |T|={} |Q_v|={} |Q_e|={}",
        profile.a.len(),
        profile.x.len(),
        profile.t.len(),
        profile.q_v.len(),
        profile.q_e.len()
    );
    if n <= limits.max_cut_vertices {
        out["lemma_5_1"] = serde_json::to_value(check_lemma_5_1(&g, &pi, None, cfg, a.p)?)?;
    }
    if a.chain {
        let chain = verify_main_chain(&g, cfg, a.p)?;
        summary.push_str(&format!(" chain={}", if chain.chain_holds { "holds" } else { "broken" }));
        out["chain"] = serde_json::to_value(chain)?;
    }
    if a.diagnostics {
        let opts = DiagnosticsOptions { seed: a.seed, ..Default::default() };
        out["diagnostics"] = serde_json::to_value(whp_diagnostics(&g, cfg, a.p, &opts)?)?;
    }
    Ok(Outcome::json(out, summary))
}

pub fn homology(a: &HomologyArgs, limits: &HomologyLimits) -> Result<Outcome, CliError> {
    if let Some(path) = &a.graph {
        let g = load(path)?;
        let betti: Vec<usize> = (0..=a.k).map(|k| betti_z2_with(&g, k, limits)).collect::<Result<_, _>>()?;
        let profile = homology_profile(&g, a.k + 1, limits)?;
        let report = check_theorem_6_2_with(&g, limits)?;
        let summary = format!("betti_{}={} h1_zero={}", a.k, betti[a.k], report.h1_zero);
        let out = json!({
            "n": g.vertex_count(),
            "m": g.edge_count(),
            "k": a.k,
            "betti": betti,
            "profile": profile,
            "theorem_6_2": report,
        });
        return Ok(Outcome::json(out, summary));
    }
    let n = a.n.expect("clap requires --graph or --n");
    let grid = parse_grid(a.grid.as_deref().unwrap_or("auto"), || {
        let centre = trifree_core::homology::kahle_threshold(n, a.k);
        geometric_grid(centre / 4.0, (centre * 4.0).min(1.0), 8).map_err(|e| CliError::Usage(e.to_string()))
    })?;
    let sweep = kahle_sweep(n, a.k, &grid, a.trials, a.seed, limits)?;
    let mut buf = Vec::new();
    write_kahle_csv(&mut buf, &sweep)?;
    Ok(Outcome {
        summary: format!("H_{} sweep over {} points, threshold {:.6}", a.k, grid.len(), sweep.threshold),
        payload: Payload::Csv(buf),
        extra: Some(json!({"kahle_threshold": sweep.threshold, "grid": grid})),
    })
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Weak => Mode::Weak,
        ModeArg::Strong => Mode::Strong,
    }
}

pub fn sweep(a: &SweepArgs, cfg: &ParamConfig, limits: &Limits) -> Result<Outcome, CliError> {
    let grid = parse_grid(&a.grid, || auto_grid(a.n, cfg.c(), a.points).map_err(CliError::from))?;
    let settings = TrialSettings { limits: *limits, ..TrialSettings::default() };
    let records = sweep_with(a.n, &grid, a.trials, a.seed, mode(a.mode), &settings)?;
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &records)?;
    let inconclusive: usize = records.iter().map(|r| r.inconclusive).sum();
    Ok(Outcome {
        summary: format!("{} points x {} trials at n={}, {} inconclusive", grid.len(), a.trials, a.n, inconclusive),
        payload: Payload::Csv(buf),
        extra: Some(json!({"grid": grid, "threshold_scale": threshold_scale(a.n)})),
    })
}

pub fn threshold(a: &ThresholdArgs, limits: &Limits) -> Result<Outcome, CliError> {
    let opts = ThresholdOptions {
        level: a.level,
        coarse_points: a.coarse_points,
        bisection_steps: a.bisection_steps,
        settings: TrialSettings { limits: *limits, ..TrialSettings::default() },
    };
    let report = threshold_crossing_with(a.n, a.trials, a.seed, &opts)?;
    let summary = match (report.p_star, report.ratio) {
        (Some(p), Some(r)) => format!("p*={p:.6} ratio={r:.6}"),
        _ => "no crossing found".to_string(),
    };
    let mut out = serde_json::to_value(&report)?;
    out["found"] = json!(report.p_star.is_some());
    // Wall times would make reruns differ.
    if let Some(Value::Array(evals)) = out.get_mut("evaluations") {
        for e in evals {
            if let Value::Object(m) = e {
                m.remove("wall_time_ms");
            }
        }
    }
    Ok(Outcome::json(out, summary))
}

pub fn obstruct(a: &ObstructArgs) -> Result<Outcome, CliError> {
    let g = load(&a.graph)?;
    let out = match obstruction_witness(&g) {
        Some(c) => json!({
            "found": true,
            "length": c.vertices.len(),
            "vertices": c.vertices,
            "edges": pairs(&g, &c.edges),
        }),
        None => json!({"found": false}),
    };
    let summary = match out["length"].as_u64() {
        Some(l) => format!("odd cycle of length {l} in no triangle"),
        None => "no obstruction".to_string(),
    };
    Ok(Outcome::json(out, summary))
}
