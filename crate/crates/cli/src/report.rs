//! Report builders for every command: each subcommand assembles one of
//! these serializable structures and renders it as text, JSON, dot, or
//! an SVG scene.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use syzygy::cycles::{validate, CycleData, DualGraph};
use syzygy::gaction::{detect_involutions, unskew, SigmaAction};
use syzygy::geom::{
    arc_quiver, diag_quiver, mesh_hom_dim_arc, mesh_hom_dim_diag, names, Arc, ConfigA, ConfigD,
    Diag, TransQuiver,
};
use syzygy::oracle::{Algebra, Field};
use syzygy::potential::{effective_potential, jacobian_relations};
use syzygy::quiver::{Quiver, VertexIx};
use syzygy::weight::{skew_weights, weights, WeightTable};

/// Failure surfaced to the command line: usage problems exit with
/// status 2, validation problems with status 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Validation(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {msg}"),
            CliError::Validation(msg) => write!(f, "validation: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

pub fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Which combinatorial model a command works in: `A` is the polygon of
/// two-diagonals, `D` the punctured polygon of two-arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    A,
    D,
}

impl Model {
    pub fn letter(self) -> &'static str {
        match self {
            Model::A => "A",
            Model::D => "D",
        }
    }
}

/// The size parameter `n` read off a quiver: half the weight total for
/// the polygon model, the full one-sided weight total for the punctured
/// one. A split quiver is merged back first to find its one-sided half.
pub fn model_size(q: &Quiver, model: Model) -> Result<u32, CliError> {
    match model {
        Model::A => {
            let data = CycleData::new(q);
            let table = weights(q, &data).map_err(|e| invalid(e.to_string()))?;
            let n = table.polygon_size().map_err(|e| invalid(e.to_string()))?;
            Ok(n as u32)
        }
        Model::D => {
            let merged = unskew(q).map_err(|e| invalid(e.to_string()))?;
            let data = CycleData::new(&merged.half);
            let glue = merged
                .half
                .arrow_by_name(&merged.glue_id)
                .ok_or_else(|| invalid(format!("merged quiver lost arrow {}", merged.glue_id)))?;
            let table =
                skew_weights(&merged.half, &data, glue).map_err(|e| invalid(e.to_string()))?;
            Ok(table.total as u32)
        }
    }
}

/// Builds the quotient algebra of a quiver from its effective potential.
pub fn algebra<F: Field>(q: &Quiver, path_cap: usize) -> Result<Algebra<F>, CliError> {
    let data = CycleData::new(q);
    let pot = effective_potential(q, &data).map_err(|e| invalid(e.to_string()))?;
    let rels = jacobian_relations(q, &pot);
    Algebra::with_path_cap(q, &rels, path_cap).map_err(|e| invalid(e.to_string()))
}

fn orbit_period<T: PartialEq + Copy>(start: T, step: impl Fn(T) -> T) -> usize {
    let mut cur = step(start);
    let mut k = 1;
    while cur != start {
        cur = step(cur);
        k += 1;
    }
    k
}

#[derive(Debug, Serialize)]
pub struct ValidateReport {
    pub name: String,
    pub vertices: usize,
    pub arrows: usize,
    pub chordless_cycles: usize,
    pub boundary_arrows: usize,
    pub interior_arrows: usize,
    pub dual_nodes: usize,
    pub dual_edges: usize,
    pub dual_connected: bool,
    pub dual_tree: bool,
    pub violations: Vec<String>,
    pub dimer_tree: bool,
}

pub fn validate_report(q: &Quiver) -> ValidateReport {
    let rep = validate(q);
    let data = CycleData::new(q);
    let dual = DualGraph::new(q, &data);
    ValidateReport {
        name: q.name.clone(),
        vertices: rep.vertex_count,
        arrows: rep.arrow_count,
        chordless_cycles: rep.cycle_count,
        boundary_arrows: rep.boundary_count,
        interior_arrows: rep.interior_count,
        dual_nodes: rep.dual_nodes,
        dual_edges: rep.dual_edges,
        dual_connected: dual.is_connected(),
        dual_tree: dual.is_tree(),
        violations: rep.violations.iter().map(|v| v.to_string()).collect(),
        dimer_tree: rep.is_dimer_tree(),
    }
}

pub fn validate_text(q: &Quiver) -> String {
    let mut out = validate(q).to_string();
    out.push('\n');
    out
}

#[derive(Debug, Serialize)]
pub struct WeightRow {
    pub arrow: String,
    pub weight: usize,
    pub path: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct WeightReport {
    pub name: String,
    pub model: String,
    pub arrows: Vec<WeightRow>,
    pub total: usize,
    pub n: usize,
}

fn weight_rows(q: &Quiver, table: &WeightTable) -> Vec<WeightRow> {
    let mut rows: Vec<WeightRow> = table
        .paths
        .iter()
        .map(|(&a, path)| WeightRow {
            arrow: q.arrow(a).id.clone(),
            weight: path.weight(),
            path: path.arrows.iter().map(|&b| q.arrow(b).id.clone()).collect(),
        })
        .collect();
    rows.sort_by(|a, b| a.arrow.cmp(&b.arrow));
    rows
}

pub fn weight_report(
    q: &Quiver,
    model: Model,
    arrow: Option<&str>,
) -> Result<WeightReport, CliError> {
    match model {
        Model::A => {
            if arrow.is_some() {
                return Err(usage(
                    "--arrow only applies to the split model (use --type D)",
                ));
            }
            let data = CycleData::new(q);
            let table = weights(q, &data).map_err(|e| invalid(e.to_string()))?;
            let n = table.polygon_size().map_err(|e| invalid(e.to_string()))?;
            Ok(WeightReport {
                name: q.name.clone(),
                model: "A".into(),
                arrows: weight_rows(q, &table),
                total: table.total,
                n,
            })
        }
        Model::D => {
            let (half, glue_id) = match arrow {
                Some(id) => (q.clone(), id.to_string()),
                None => {
                    let merged = unskew(q).map_err(|e| invalid(e.to_string()))?;
                    (merged.half, merged.glue_id)
                }
            };
            let glue = half
                .arrow_by_name(&glue_id)
                .ok_or_else(|| usage(format!("no arrow named {glue_id}")))?;
            let data = CycleData::new(&half);
            let table = skew_weights(&half, &data, glue).map_err(|e| invalid(e.to_string()))?;
            Ok(WeightReport {
                name: q.name.clone(),
                model: "D".into(),
                arrows: weight_rows(&half, &table),
                total: table.total,
                n: table.total,
            })
        }
    }
}

pub fn weight_text(r: &WeightReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "quiver {}, model {}", r.name, r.model);
    for row in &r.arrows {
        let _ = writeln!(
            out,
            "arrow {}: weight {}, path {}",
            row.arrow,
            row.weight,
            row.path.join(" ")
        );
    }
    let _ = writeln!(out, "total weight {}, N = {}", r.total, r.n);
    out
}

#[derive(Debug, Serialize)]
pub struct SigmaReport {
    pub name: String,
    pub found: usize,
    pub glue_arrow: Option<String>,
    pub fixed_vertices: Vec<String>,
    pub swaps: Vec<[String; 2]>,
    pub half_vertices: Option<usize>,
}

pub fn sigma_report(q: &Quiver) -> SigmaReport {
    let found = detect_involutions(q);
    if let [one] = found.as_slice() {
        let sigma = &one.sigma;
        let mut fixed: Vec<String> = sigma
            .fixed_vertices()
            .iter()
            .map(|&v| q.vertex_name(v).to_string())
            .collect();
        fixed.sort();
        let mut swaps = Vec::new();
        for v in q.vertices() {
            let w = sigma.vertex(v);
            if w.0 > v.0 {
                let mut pair = [
                    q.vertex_name(v).to_string(),
                    q.vertex_name(w).to_string(),
                ];
                pair.sort();
                swaps.push(pair);
            }
        }
        swaps.sort();
        SigmaReport {
            name: q.name.clone(),
            found: 1,
            glue_arrow: Some(q.arrow(one.glue_arrow).id.clone()),
            fixed_vertices: fixed,
            swaps,
            half_vertices: one.half(q).ok().map(|h| h.vertex_count()),
        }
    } else {
        SigmaReport {
            name: q.name.clone(),
            found: found.len(),
            glue_arrow: None,
            fixed_vertices: Vec::new(),
            swaps: Vec::new(),
            half_vertices: None,
        }
    }
}

pub fn sigma_text(r: &SigmaReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "quiver {}: {} involution{} found",
        r.name,
        r.found,
        if r.found == 1 { "" } else { "s" }
    );
    if let Some(glue) = &r.glue_arrow {
        let _ = writeln!(out, "glue arrow: {glue}");
        let _ = writeln!(out, "fixed vertices: {}", r.fixed_vertices.join(" "));
        let swaps: Vec<String> = r.swaps.iter().map(|p| format!("{}<->{}", p[0], p[1])).collect();
        let _ = writeln!(out, "swaps: {}", swaps.join(" "));
        if let Some(h) = r.half_vertices {
            let _ = writeln!(out, "half: {h} vertices");
        }
    }
    out
}

/// Hand-picked curve assignment read from a JSON file: the size
/// parameter plus one curve per vertex.
#[derive(Debug, Deserialize)]
pub struct ConfigOverride {
    pub n: u32,
    pub curves: BTreeMap<String, String>,
}

fn config_a_from_override(q: &Quiver, ov: &ConfigOverride) -> Result<ConfigA, CliError> {
    let mut assign = BTreeMap::new();
    for (vname, curve) in &ov.curves {
        let v = q
            .vertex_by_name(vname)
            .ok_or_else(|| usage(format!("config names unknown vertex {vname}")))?;
        let d = Diag::parse(ov.n, curve).map_err(|e| usage(format!("config curve {curve}: {e}")))?;
        assign.insert(v, d);
    }
    if assign.len() != q.vertex_count() {
        return Err(usage(format!(
            "config assigns {} of {} vertices",
            assign.len(),
            q.vertex_count()
        )));
    }
    Ok(ConfigA::new(ov.n, assign))
}

fn config_d_from_override(q: &Quiver, ov: &ConfigOverride) -> Result<ConfigD, CliError> {
    let mut assign = BTreeMap::new();
    for (vname, curve) in &ov.curves {
        let v = q
            .vertex_by_name(vname)
            .ok_or_else(|| usage(format!("config names unknown vertex {vname}")))?;
        let a = Arc::parse(ov.n, curve).map_err(|e| usage(format!("config curve {curve}: {e}")))?;
        assign.insert(v, a);
    }
    if assign.len() != q.vertex_count() {
        return Err(usage(format!(
            "config assigns {} of {} vertices",
            assign.len(),
            q.vertex_count()
        )));
    }
    Ok(ConfigD::new(ov.n, assign))
}

/// The unique order-two symmetry of `q`, when there is exactly one.
pub fn unique_sigma(q: &Quiver) -> Option<SigmaAction> {
    let mut found = detect_involutions(q);
    if found.len() == 1 {
        Some(found.remove(0).sigma)
    } else {
        None
    }
}

/// Picks the diagonal configuration for a polygon-model command: a
/// validated override when one is given, otherwise the solver's.
pub fn pick_config_a(
    q: &Quiver,
    n: u32,
    ov: Option<&ConfigOverride>,
) -> Result<(ConfigA, &'static str), CliError> {
    match ov {
        Some(o) => {
            if o.n != n {
                return Err(usage(format!(
                    "config has n = {} but the quiver weights give n = {n}",
                    o.n
                )));
            }
            let cfg = config_a_from_override(q, o)?;
            let violations = cfg.validate(q, None);
            if !violations.is_empty() {
                let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(invalid(format!(
                    "configuration violates crossing rules: {}",
                    msgs.join("; ")
                )));
            }
            Ok((cfg, "override"))
        }
        None => {
            let sigma = unique_sigma(q);
            let cfg = ConfigA::solve(q, n, sigma.as_ref())
                .ok_or_else(|| invalid("no crossing-valid diagonal configuration found"))?;
            Ok((cfg, "solver"))
        }
    }
}

/// Picks the arc configuration for a punctured-model command.
pub fn pick_config_d(
    q: &Quiver,
    n: u32,
    ov: Option<&ConfigOverride>,
) -> Result<(ConfigD, &'static str), CliError> {
    match ov {
        Some(o) => {
            if o.n != n {
                return Err(usage(format!(
                    "config has n = {} but the quiver weights give n = {n}",
                    o.n
                )));
            }
            let cfg = config_d_from_override(q, o)?;
            let violations = cfg.validate(q);
            if !violations.is_empty() {
                let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(invalid(format!(
                    "configuration violates crossing rules: {}",
                    msgs.join("; ")
                )));
            }
            Ok((cfg, "override"))
        }
        None => {
            let cfg = ConfigD::solve(q, n)
                .ok_or_else(|| invalid("no crossing-valid arc configuration found"))?;
            Ok((cfg, "solver"))
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CurveRow {
    pub vertex: String,
    pub curve: String,
}

#[derive(Debug, Serialize)]
pub struct PolygonReport {
    pub name: String,
    pub model: String,
    pub n: u32,
    pub polygon_vertices: u32,
    pub radical: Vec<CurveRow>,
    pub curves: Vec<String>,
    pub config_source: String,
}

fn curve_rows<T: std::fmt::Display>(
    q: &Quiver,
    assign: impl Iterator<Item = (VertexIx, T)>,
) -> Vec<CurveRow> {
    let mut rows: Vec<CurveRow> = assign
        .map(|(v, c)| CurveRow {
            vertex: q.vertex_name(v).to_string(),
            curve: c.to_string(),
        })
        .collect();
    rows.sort_by(|a, b| a.vertex.cmp(&b.vertex));
    rows
}

pub fn polygon_report_a(
    q: &Quiver,
    n: u32,
    ov: Option<&ConfigOverride>,
) -> Result<(PolygonReport, ConfigA), CliError> {
    let (cfg, source) = pick_config_a(q, n, ov)?;
    let report = PolygonReport {
        name: q.name.clone(),
        model: "A".into(),
        n,
        polygon_vertices: 2 * n,
        radical: curve_rows(q, cfg.assignments()),
        curves: Diag::all(n).iter().map(|d| d.to_string()).collect(),
        config_source: source.into(),
    };
    Ok((report, cfg))
}

pub fn polygon_report_d(
    q: &Quiver,
    n: u32,
    ov: Option<&ConfigOverride>,
) -> Result<(PolygonReport, ConfigD), CliError> {
    let (cfg, source) = pick_config_d(q, n, ov)?;
    let report = PolygonReport {
        name: q.name.clone(),
        model: "D".into(),
        n,
        polygon_vertices: n,
        radical: curve_rows(q, cfg.assignments()),
        curves: Arc::all(n).iter().map(|a| a.to_string()).collect(),
        config_source: source.into(),
    };
    Ok((report, cfg))
}

pub fn polygon_text(r: &PolygonReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "quiver {}, model {}, n = {} ({} boundary vertices)",
        r.name, r.model, r.n, r.polygon_vertices
    );
    let _ = writeln!(out, "configuration ({}):", r.config_source);
    for row in &r.radical {
        let _ = writeln!(out, "  {} -> {}", row.vertex, row.curve);
    }
    let _ = writeln!(out, "{} curves in the model", r.curves.len());
    out
}

#[derive(Debug, Serialize)]
pub struct ArquiverReport {
    pub model: String,
    pub n: u32,
    pub nodes: Vec<String>,
    pub arrows: Vec<[String; 2]>,
    pub tau_orbits: Vec<Vec<String>>,
}

fn arquiver_from<T: Ord + Copy + std::fmt::Display>(
    model: Model,
    n: u32,
    g: &TransQuiver<T>,
    tau: impl Fn(&T) -> T,
) -> ArquiverReport {
    ArquiverReport {
        model: model.letter().into(),
        n,
        nodes: g.nodes().iter().map(|t| t.to_string()).collect(),
        arrows: g
            .arrows()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect(),
        tau_orbits: g
            .orbits(tau)
            .into_iter()
            .map(|o| o.into_iter().map(|t| t.to_string()).collect())
            .collect(),
    }
}

pub fn arquiver_report(model: Model, n: u32) -> Result<ArquiverReport, CliError> {
    match model {
        Model::A => {
            if n < 3 {
                return Err(usage("model A needs n >= 3"));
            }
            Ok(arquiver_from(model, n, &diag_quiver(n), |d| d.tau()))
        }
        Model::D => {
            if n < 3 || n.is_multiple_of(2) {
                return Err(usage("model D needs odd n >= 3"));
            }
            Ok(arquiver_from(model, n, &arc_quiver(n), |a| a.tau()))
        }
    }
}

pub fn arquiver_text(r: &ArquiverReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "model {}, n = {}: {} nodes, {} arrows, {} tau orbits",
        r.model,
        r.n,
        r.nodes.len(),
        r.arrows.len(),
        r.tau_orbits.len()
    );
    for (i, orbit) in r.tau_orbits.iter().enumerate() {
        let _ = writeln!(out, "orbit {} ({}): {}", i + 1, orbit.len(), orbit.join(" "));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct ResolveRow {
    pub step: usize,
    pub curve: String,
    pub cover: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ResolveReport {
    pub name: String,
    pub model: String,
    pub n: u32,
    pub start: String,
    pub period: usize,
    pub steps: usize,
    pub covers: Vec<ResolveRow>,
    pub config_source: String,
}

pub fn resolve_report_a(
    q: &Quiver,
    n: u32,
    start: &str,
    steps: usize,
    ov: Option<&ConfigOverride>,
) -> Result<ResolveReport, CliError> {
    let (cfg, source) = pick_config_a(q, n, ov)?;
    let start_d =
        Diag::parse(n, start).map_err(|e| usage(format!("start curve {start}: {e}")))?;
    let seq = cfg.cover_sequence(q, &start_d, steps);
    let mut covers = Vec::new();
    let mut cur = start_d;
    for (k, step_cover) in seq.iter().enumerate() {
        covers.push(ResolveRow {
            step: k,
            curve: cur.to_string(),
            cover: names(q, step_cover),
        });
        cur = cur.syzygy();
    }
    Ok(ResolveReport {
        name: q.name.clone(),
        model: "A".into(),
        n,
        start: start_d.to_string(),
        period: orbit_period(start_d, |d| d.syzygy()),
        steps,
        covers,
        config_source: source.into(),
    })
}

pub fn resolve_report_d(
    q: &Quiver,
    n: u32,
    start: &str,
    steps: usize,
    ov: Option<&ConfigOverride>,
) -> Result<ResolveReport, CliError> {
    let (cfg, source) = pick_config_d(q, n, ov)?;
    let start_a = Arc::parse(n, start).map_err(|e| usage(format!("start curve {start}: {e}")))?;
    let seq = cfg.cover_sequence(q, &start_a, steps);
    let mut covers = Vec::new();
    let mut cur = start_a;
    for (k, step_cover) in seq.iter().enumerate() {
        covers.push(ResolveRow {
            step: k,
            curve: cur.to_string(),
            cover: names(q, step_cover),
        });
        cur = cur.syzygy();
    }
    Ok(ResolveReport {
        name: q.name.clone(),
        model: "D".into(),
        n,
        start: start_a.to_string(),
        period: orbit_period(start_a, |a| a.syzygy()),
        steps,
        covers,
        config_source: source.into(),
    })
}

pub fn resolve_text(r: &ResolveReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "quiver {}, model {}, n = {}", r.name, r.model, r.n);
    let _ = writeln!(
        out,
        "start {}, period {}, configuration from {}",
        r.start, r.period, r.config_source
    );
    for row in &r.covers {
        let _ = writeln!(
            out,
            "step {}: {}  cover {{{}}}",
            row.step,
            row.curve,
            row.cover.join(", ")
        );
    }
    out
}

#[derive(Debug, Serialize)]
pub struct CrossingsReport {
    pub model: String,
    pub n: u32,
    pub first: String,
    pub second: String,
    pub forward: u8,
    pub backward: u8,
    pub sum: u8,
}

pub fn crossings_report(
    model: Model,
    n: u32,
    first: &str,
    second: &str,
) -> Result<CrossingsReport, CliError> {
    let (first, second, forward, backward) = match model {
        Model::A => {
            let a = Diag::parse(n, first).map_err(|e| usage(format!("curve {first}: {e}")))?;
            let b = Diag::parse(n, second).map_err(|e| usage(format!("curve {second}: {e}")))?;
            (a.to_string(), b.to_string(), a.crossing(&b), b.crossing(&a))
        }
        Model::D => {
            let a = Arc::parse(n, first).map_err(|e| usage(format!("curve {first}: {e}")))?;
            let b = Arc::parse(n, second).map_err(|e| usage(format!("curve {second}: {e}")))?;
            (a.to_string(), b.to_string(), a.crossing(&b), b.crossing(&a))
        }
    };
    Ok(CrossingsReport {
        model: model.letter().into(),
        n,
        first,
        second,
        forward,
        backward,
        sum: forward + backward,
    })
}

pub fn crossings_text(r: &CrossingsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "model {}, n = {}", r.model, r.n);
    let _ = writeln!(out, "e({}, {}) = {}", r.first, r.second, r.forward);
    let _ = writeln!(out, "e({}, {}) = {}", r.second, r.first, r.backward);
    let _ = writeln!(out, "sum = {}", r.sum);
    out
}

#[derive(Debug, Serialize)]
pub struct HomReport {
    pub model: String,
    pub n: u32,
    pub source: String,
    pub target: String,
    pub dim: usize,
}

pub fn hom_report(model: Model, n: u32, source: &str, target: &str) -> Result<HomReport, CliError> {
    let (source, target, dim) = match model {
        Model::A => {
            let a = Diag::parse(n, source).map_err(|e| usage(format!("curve {source}: {e}")))?;
            let b = Diag::parse(n, target).map_err(|e| usage(format!("curve {target}: {e}")))?;
            let dim = mesh_hom_dim_diag(&a, &b).map_err(|e| invalid(e.to_string()))?;
            (a.to_string(), b.to_string(), dim)
        }
        Model::D => {
            let a = Arc::parse(n, source).map_err(|e| usage(format!("curve {source}: {e}")))?;
            let b = Arc::parse(n, target).map_err(|e| usage(format!("curve {target}: {e}")))?;
            let dim = mesh_hom_dim_arc(&a, &b).map_err(|e| invalid(e.to_string()))?;
            (a.to_string(), b.to_string(), dim)
        }
    };
    Ok(HomReport {
        model: model.letter().into(),
        n,
        source,
        target,
        dim,
    })
}

pub fn hom_text(r: &HomReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "model {}, n = {}", r.model, r.n);
    let _ = writeln!(
        out,
        "stable hom {} -> {}: dim {}",
        r.source, r.target, r.dim
    );
    out
}

#[derive(Debug, Serialize)]
pub struct OracleVertexRow {
    pub vertex: String,
    pub curve: String,
    pub period: usize,
    pub covers_match: bool,
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub name: String,
    pub model: String,
    pub field: String,
    pub n: u32,
    pub total_weight: usize,
    pub algebra_dim: usize,
    pub steps: usize,
    pub vertices: Vec<OracleVertexRow>,
    pub pass: bool,
}

fn oracle_vertex_rows<F: Field>(
    alg: &Algebra<F>,
    q: &Quiver,
    steps: usize,
    rows: Vec<(VertexIx, String, usize, Vec<Vec<String>>)>,
) -> Vec<OracleVertexRow> {
    let mut out = Vec::new();
    for (v, curve, expected_period, geo) in rows {
        let m = alg.radical(&alg.projective(v));
        let period = alg.omega_period(&m, 4 * steps + 8).unwrap_or(0);
        let tops = alg.resolution_tops(&m, steps);
        let matches = tops.len() == steps
            && tops
                .iter()
                .zip(geo.iter())
                .all(|(top, expect)| &names(q, top) == expect);
        out.push(OracleVertexRow {
            vertex: q.vertex_name(v).to_string(),
            curve,
            period,
            covers_match: matches && period == expected_period,
        });
    }
    out
}

pub fn oracle_report<F: Field>(
    q: &Quiver,
    model: Model,
    steps: Option<usize>,
    ov: Option<&ConfigOverride>,
    field_name: &str,
    path_cap: usize,
) -> Result<OracleReport, CliError> {
    let n = model_size(q, model)?;
    let steps = steps.unwrap_or(2 * n as usize);
    let alg = algebra::<F>(q, path_cap)?;
    let mut sorted: Vec<VertexIx> = q.vertices().collect();
    sorted.sort_by(|a, b| q.vertex_name(*a).cmp(q.vertex_name(*b)));
    let rows = match model {
        Model::A => {
            let (cfg, _) = pick_config_a(q, n, ov)?;
            sorted
                .iter()
                .map(|&v| {
                    let d = cfg.diagonal(v).expect("solver assigns every vertex");
                    let geo: Vec<Vec<String>> = cfg
                        .cover_sequence(q, &d, steps)
                        .iter()
                        .map(|c| names(q, c))
                        .collect();
                    (v, d.to_string(), orbit_period(d, |x| x.syzygy()), geo)
                })
                .collect()
        }
        Model::D => {
            let (cfg, _) = pick_config_d(q, n, ov)?;
            sorted
                .iter()
                .map(|&v| {
                    let a = cfg.arc(v).expect("solver assigns every vertex");
                    let geo: Vec<Vec<String>> = cfg
                        .cover_sequence(q, &a, steps)
                        .iter()
                        .map(|c| names(q, c))
                        .collect();
                    (v, a.to_string(), orbit_period(a, |x| x.syzygy()), geo)
                })
                .collect()
        }
    };
    let data = CycleData::new(q);
    let total_weight = match model {
        Model::A => weights(q, &data).map_err(|e| invalid(e.to_string()))?.total,
        Model::D => n as usize,
    };
    let vertices = oracle_vertex_rows(&alg, q, steps, rows);
    let pass = vertices.iter().all(|r| r.covers_match && r.period > 0);
    Ok(OracleReport {
        name: q.name.clone(),
        model: model.letter().into(),
        field: field_name.into(),
        n,
        total_weight,
        algebra_dim: alg.dim(),
        steps,
        vertices,
        pass,
    })
}

pub fn oracle_text(r: &OracleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "quiver {}, model {}, field {}, n = {}",
        r.name, r.model, r.field, r.n
    );
    let _ = writeln!(
        out,
        "total weight {}, algebra dimension {}",
        r.total_weight, r.algebra_dim
    );
    for row in &r.vertices {
        let _ = writeln!(
            out,
            "vertex {}: curve {}, period {}, covers match over {} steps: {}",
            row.vertex,
            row.curve,
            row.period,
            r.steps,
            if row.covers_match { "yes" } else { "NO" }
        );
    }
    let _ = writeln!(
        out,
        "oracle verification: {}",
        if r.pass { "pass" } else { "FAIL" }
    );
    out
}
