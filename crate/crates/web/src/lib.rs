//! Browser bindings for the `facepair` library. Every export returns a JSON
//! string; the plain `*_json` functions hold the logic and run natively too.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use facepair::group::{h1, presentation_from_pairings};
use facepair::report::{table_rows, table_step};
use facepair::symmetry::singularity_report;
use facepair::{FamilyId, PairedComplex};

/// Largest `n` the page will ask for.
pub const MAX_N: usize = 40;

fn family(name: &str) -> Result<FamilyId, String> {
    name.parse().map_err(|e: facepair::Error| e.to_string())
}

fn check_n(n: usize) -> Result<usize, String> {
    if (1..=MAX_N).contains(&n) {
        Ok(n)
    } else {
        Err(format!("n must be between 1 and {MAX_N}"))
    }
}

/// Column and row of a vertex in the unrolled band, from its label.
fn position(label: &str) -> (f64, f64) {
    let (letter, index) = label.split_at(1);
    let i: f64 = index.parse().unwrap_or(0.0);
    match letter {
        "P" => (i, 0.0),
        "Q" => (i + 0.5, 1.0),
        "R" => (i, 2.0),
        _ => (i + 0.5, 3.0),
    }
}

fn band(c: &PairedComplex, n: usize) -> Result<Value, String> {
    let orbits = c.edge_orbits().map_err(|e| e.to_string())?;
    let class = c.edge_class_index(&orbits);
    let vertices: Vec<Value> = c
        .vertices
        .iter()
        .map(|v| {
            let (x, y) = position(v);
            json!({ "label": v, "x": x, "y": y })
        })
        .collect();
    let edges: Vec<Value> = c
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let (x1, y1) = position(&c.vertices[e.tail]);
            let (mut x2, y2) = position(&c.vertices[e.head]);
            // edges that close the band up are drawn across the seam
            let half = n as f64 / 2.0;
            if x2 - x1 > half {
                x2 -= n as f64;
            } else if x1 - x2 > half {
                x2 += n as f64;
            }
            json!({
                "name": c.edge_display(i),
                "class": class[i],
                "from": [x1, y1],
                "to": [x2, y2],
            })
        })
        .collect();
    Ok(json!({ "width": n + 1, "vertices": vertices, "edges": edges }))
}

pub fn analyze_json(family_name: &str, n: usize) -> Result<Value, String> {
    let f = family(family_name)?;
    let n = check_n(n)?;
    let c = f.build(n).map_err(|e| e.to_string())?;
    let cert = c.is_manifold().map_err(|e| e.to_string())?;
    let orbits = c.edge_orbits().map_err(|e| e.to_string())?;
    let classes: Vec<Value> = orbits
        .iter()
        .enumerate()
        .map(|(i, o)| {
            json!({
                "class": i,
                "representative": c.edge_display(o.representative),
                "size": o.len(),
                "cycle": o.cycle_word.to_string(),
            })
        })
        .collect();
    let homology = h1(&presentation_from_pairings(&c).map_err(|e| e.to_string())?);
    Ok(json!({
        "name": c.name,
        "sigma": [cert.counts.sigma0, cert.counts.sigma1, cert.counts.sigma2, cert.counts.sigma3],
        "euler": cert.euler_characteristic,
        "manifold": cert.is_manifold,
        "h1": homology.to_string(),
        "edgeClasses": classes,
        "band": band(&c, n)?,
    }))
}

pub fn covering_json(family_name: &str, n: usize, step: usize) -> Result<Value, String> {
    let f = family(family_name)?;
    let n = check_n(n)?;
    let step = if step == 0 { table_step(f, n) } else { step };
    let r = singularity_report(f, n, step).map_err(|e| e.to_string())?;
    let components: Vec<Value> = r
        .components
        .iter()
        .map(|c| {
            json!({
                "kind": c.kind.to_string(),
                "index": c.branching_index,
                "upstairsOrbitSize": c.upstairs_orbit_size,
                "location": c.location,
            })
        })
        .collect();
    Ok(json!({
        "step": step,
        "base": format!("{}({})", r.base_family, r.base_n),
        "baseMatchesBuilder": r.base_matches_builder,
        "degree": r.covering_degree,
        "stronglyCyclic": r.is_strongly_cyclic(),
        "components": components,
    }))
}

pub fn table_json(family_name: &str, from: usize, to: usize) -> Result<Value, String> {
    let f = family(family_name)?;
    check_n(to)?;
    let rows = table_rows(f, from, to).map_err(|e| e.to_string())?;
    Ok(Value::Array(
        rows.iter()
            .map(|r| json!({ "n": r.n, "h1": r.homology.to_string(), "singular": r.components_cell(), "volume": "external" }))
            .collect(),
    ))
}

fn export(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(family: &str, n: usize) -> Result<String, JsValue> {
    export(analyze_json(family, n))
}

/// `step = 0` picks the rotation used in the tables.
#[wasm_bindgen]
pub fn covering(family: &str, n: usize, step: usize) -> Result<String, JsValue> {
    export(covering_json(family, n, step))
}

#[wasm_bindgen]
pub fn homology_table(family: &str, from: usize, to: usize) -> Result<String, JsValue> {
    export(table_json(family, from, to))
}
