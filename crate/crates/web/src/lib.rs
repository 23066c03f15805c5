//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes plain strings and returns a JSON string, so the page
//! needs no generated TypeScript types. The functions without the `wasm_`
//! prefix hold the logic and are tested natively.

use bei_multidegree::engine::{family_multidegree, multidegree};
use bei_multidegree::graph::{parse_graph6, to_graph6, Family, Graph};
use bei_multidegree::minsets::{min_sets, LabelledMember};
use bei_multidegree::oracle::{verify, OracleConfig, VerifyReport};
use bei_multidegree::BiPoly;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest order the page will send to the Gröbner computation.
pub const WEB_ORACLE_GUARD: usize = 8;

/// Reads `edges` ("1-2,2-3"), `family` ("star:6") or `graph6` input.
pub fn parse_source(kind: &str, text: &str) -> Result<Graph, String> {
    let text = text.trim();
    match kind {
        "edges" => Graph::parse_edge_list(text).map_err(|e| e.to_string()),
        "family" => {
            let f: Family = text.parse().map_err(|e: bei_multidegree::graph::FamilyError| e.to_string())?;
            f.build().map_err(|e| e.to_string())
        }
        "graph6" => parse_graph6(text).map_err(|e| e.to_string()),
        other => Err(format!("unknown input kind {other:?}")),
    }
}

#[derive(Serialize)]
pub struct ComponentView {
    pub vertices: Vec<usize>,
    pub h_min: i64,
    pub members: Vec<LabelledMember>,
}

#[derive(Serialize)]
pub struct ComputeView {
    pub n: usize,
    pub graph6: String,
    /// 1-indexed pairs.
    pub edges: Vec<(usize, usize)>,
    pub h_min: i64,
    pub codim: i64,
    pub witness_count: u64,
    pub text: String,
    pub latex: String,
    pub multidegree: BiPoly,
    /// Minimum-height subsets per connected component, relabelled to the
    /// whole graph's 1-indexed vertices.
    pub components: Vec<ComponentView>,
}

pub fn compute_view(g: &Graph) -> Result<ComputeView, String> {
    let r = multidegree(g).map_err(|e| e.to_string())?;
    let mut components = Vec::new();
    for block in g.connected_components(g.vertices()).blocks {
        let names: Vec<usize> = block.to_vec();
        let report = min_sets(&g.induced_subgraph(block)).map_err(|e| e.to_string())?.labelled();
        let members = report
            .members
            .into_iter()
            .map(|m| LabelledMember {
                set: m.set.into_iter().map(|v| names[v - 1] + 1).collect(),
                sizes: m.sizes,
            })
            .collect();
        components.push(ComponentView {
            vertices: names.iter().map(|v| v + 1).collect(),
            h_min: report.h_min,
            members,
        });
    }
    Ok(ComputeView {
        n: g.order(),
        graph6: to_graph6(g),
        edges: g.edges().map(|(u, v)| (u + 1, v + 1)).collect(),
        h_min: r.h_min,
        codim: r.codim,
        witness_count: r.witness_count,
        text: r.poly.to_string(),
        latex: r.poly.to_latex(),
        multidegree: r.poly,
        components,
    })
}

#[derive(Serialize)]
pub struct SweepRow {
    pub family: String,
    pub order: usize,
    /// Coefficients by t1-degree, from `t1^d` down to `t2^d`.
    pub coefficients: Vec<String>,
    pub degree: u32,
    pub text: String,
}

/// Closed forms for `name:p` (or `windmill:p,m`) over `p` in `from..=to`.
/// Invalid parameters in the range are skipped.
pub fn family_sweep(name: &str, from: usize, to: usize, second: usize) -> Result<Vec<SweepRow>, String> {
    if to < from || to - from > 40 {
        return Err("range must be increasing and at most 40 wide".into());
    }
    let mut rows = Vec::new();
    for p in from..=to {
        let params: Vec<usize> = if name == "windmill" { vec![p, second] } else { vec![p] };
        let Ok(f) = Family::new(name, &params) else { continue };
        let poly = family_multidegree(f).map_err(|e| e.to_string())?;
        let degree = poly.homogeneous_degree().unwrap_or(0);
        let coefficients = (0..=degree).rev().map(|i| poly.coeff(i, degree - i).to_string()).collect();
        rows.push(SweepRow { family: f.to_string(), order: f.order(), coefficients, degree, text: poly.to_string() });
    }
    if rows.is_empty() {
        return Err(format!("no valid {name} parameters in {from}..={to}"));
    }
    Ok(rows)
}

pub fn verify_view(g: &Graph) -> Result<VerifyReport, String> {
    let config = OracleConfig { guard: WEB_ORACLE_GUARD, ..OracleConfig::default() };
    verify(g, &config).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn wasm_compute(kind: &str, text: &str) -> Result<String, JsError> {
    let g = parse_source(kind, text).map_err(|e| JsError::new(&e))?;
    to_json(&compute_view(&g).map_err(|e| JsError::new(&e))?)
}

#[wasm_bindgen]
pub fn wasm_family_sweep(name: &str, from: usize, to: usize, second: usize) -> Result<String, JsError> {
    to_json(&family_sweep(name, from, to, second).map_err(|e| JsError::new(&e))?)
}

#[wasm_bindgen]
pub fn wasm_verify(kind: &str, text: &str) -> Result<String, JsError> {
    let g = parse_source(kind, text).map_err(|e| JsError::new(&e))?;
    to_json(&verify_view(&g).map_err(|e| JsError::new(&e))?)
}
