//! Browser bindings: homology of a small birack, the invariant report of a
//! catalog diagram, and an axiom check. Everything crosses the boundary as
//! strings so the page needs no glue beyond the generated module.

use wasm_bindgen::prelude::*;

use knotkit::algebra::{check_axioms, BirackTable, Builtin};
use knotkit::diagram::{catalog, catalog_names};
use knotkit::homology::{homology_group, Theory};
use knotkit::invariants::diagram_report;

/// Largest chain-group rank the page will try; bigger inputs stall the tab.
pub const MAX_RANK: usize = 1_000;

/// A builtin name like `q3` or `alexander:5:2:3`, or a birack JSON document.
pub fn parse_birack(spec: &str) -> Result<BirackTable, String> {
    let spec = spec.trim();
    let table = if spec.starts_with('{') {
        BirackTable::from_json(spec)
    } else {
        spec.parse::<Builtin>().and_then(Builtin::build)
    };
    table.map_err(|e| e.to_string())
}

pub fn homology_text(birack: &str, degree: usize, theory: &str) -> Result<String, String> {
    let t = parse_birack(birack)?;
    let theory: Theory = theory.parse().map_err(|e: knotkit::KnotError| e.to_string())?;
    let rank = t.size().checked_pow(degree as u32 + 1).unwrap_or(usize::MAX);
    if rank > MAX_RANK {
        return Err(format!("{} elements in degree {degree} is too large for the browser", t.size()));
    }
    let h = homology_group(&t, degree, theory).map_err(|e| e.to_string())?;
    Ok(h.group.to_string())
}

pub fn report_json(diagram: &str) -> Result<String, String> {
    let d = catalog(diagram.trim()).map_err(|e| e.to_string())?;
    let r = diagram_report(&d).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&r).expect("report serializes"))
}

pub fn axioms_json(birack: &str) -> Result<String, String> {
    let r = check_axioms(&parse_birack(birack)?);
    Ok(serde_json::to_string(&r).expect("report serializes"))
}

#[wasm_bindgen]
pub fn homology(birack: &str, degree: usize, theory: &str) -> Result<String, JsError> {
    homology_text(birack, degree, theory).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn report(diagram: &str) -> Result<String, JsError> {
    report_json(diagram).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn axioms(birack: &str) -> Result<String, JsError> {
    axioms_json(birack).map_err(|e| JsError::new(&e))
}

/// Catalog names, newline separated, for the page's picker.
#[wasm_bindgen]
pub fn diagrams() -> String {
    catalog_names().join("\n")
}
