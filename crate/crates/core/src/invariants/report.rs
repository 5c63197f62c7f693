use std::collections::BTreeMap;

use serde::Serialize;

use super::chirality_q3;
use crate::algebra::Builtin;
use crate::colouring::count_colourings;
use crate::diagram::{CrossingClass, Diagram, Sidedness};
use crate::error::{KnotError, Result};

/// Tables whose colouring counts appear in every report.
pub const REPORT_TABLES: [Builtin; 6] = [
    Builtin::ThreeColour,
    Builtin::BlackWhite,
    Builtin::Twist(2),
    Builtin::Twist(3),
    Builtin::Dihedral(5),
    Builtin::Alexander { modulus: 5, lambda: 2, mu: 3 },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationSummary {
    pub sinks: usize,
    pub sources: usize,
    pub saddles: usize,
    pub good: bool,
    pub classes: Vec<Option<CrossingClass>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub diagram: String,
    pub writhe: i64,
    pub crossings: usize,
    pub virtual_crossings: usize,
    pub components: usize,
    pub genus: usize,
    pub colour_counts: BTreeMap<String, usize>,
    /// `None` when some crossing sum is not a quandle cycle, which can
    /// happen on virtual diagrams.
    pub chirality_q3: Option<Vec<i64>>,
    pub orientation: Vec<OrientationSummary>,
    pub two_sided: bool,
    pub irreducible: bool,
    pub chessboard: bool,
}

pub fn diagram_report(d: &Diagram) -> Result<DiagramReport> {
    let mut colour_counts = BTreeMap::new();
    for b in REPORT_TABLES {
        let t = b.build()?;
        colour_counts.insert(t.name().to_string(), count_colourings(d, &t));
    }
    let chirality = match chirality_q3(d) {
        Ok(v) => Some(v),
        Err(KnotError::NotACycle) => None,
        Err(e) => return Err(e),
    };
    let orientation = d
        .alternate_orientations()
        .into_iter()
        .map(|o| OrientationSummary {
            sinks: o.sinks,
            sources: o.sources,
            saddles: o.saddles,
            good: o.is_good(),
            classes: o.classes,
        })
        .collect();
    let Sidedness { two_sided, irreducible } = d.sidedness()?;
    Ok(DiagramReport {
        diagram: d.name().to_string(),
        writhe: d.writhe(),
        crossings: d.classical_count(),
        virtual_crossings: d.virtual_count(),
        components: d.component_count(),
        genus: d.genus()?,
        colour_counts,
        chirality_q3: chirality,
        orientation,
        two_sided,
        irreducible,
        chessboard: d.chessboard()?.is_some(),
    })
}
