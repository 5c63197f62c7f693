//! Chain-level invariants of coloured diagrams: the signed crossing sum of a
//! whole colouring, its quandle homology class, the crossing-invariant group
//! cut out by Reidemeister III relations, and black/white 2-cycles.

mod crossing_group;
mod r3;
mod report;

pub use crossing_group::{crossing_invariant_group, CrossingInvariantGroup};
pub use r3::{r3_relations, R3Colouring, R3Relations};
pub use report::{diagram_report, DiagramReport, OrientationSummary, REPORT_TABLES};

use serde::Serialize;

use crate::algebra::{BirackTable, Builtin, Element};
use crate::colouring::{enumerate_whole_colourings, EdgeColouring, WholeColouring};
use crate::diagram::Diagram;
use crate::error::{KnotError, Result};
use crate::homology::{boundary, homology_group, Chain, ClassCoords, HomologyBasis, Theory};

/// A crossing read at its source corner: the face colour there, the under
/// and over colours of the semi-arcs bounding that corner, and the sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossingTriple {
    pub region: Element,
    pub under: Element,
    pub over: Element,
    pub sign: i64,
}

/// Source-corner triples of a whole colouring, in vertex order.
pub fn crossing_triples(d: &Diagram, wc: &WholeColouring) -> Result<Vec<CrossingTriple>> {
    let faces = d.faces()?;
    if wc.faces.len() != faces.count || wc.edges.0.len() != d.semi_arcs().len() {
        return Err(KnotError::NotWholeColoured);
    }
    Ok(d.crossings()
        .map(|c| {
            let (under, over) = c.source_corner_arcs();
            CrossingTriple {
                region: wc.faces[faces.right[c.source_corner_reference()]],
                under: wc.edges.colour(under),
                over: wc.edges.colour(over),
                sign: c.sign,
            }
        })
        .collect())
}

/// `Σ sign · (region, under, over)` over classical crossings.
pub fn whole_cycle(d: &Diagram, wc: &WholeColouring) -> Result<Chain> {
    let mut c = Chain::zero(3);
    for t in crossing_triples(d, wc)? {
        c.add_term(&[t.region, t.under, t.over], t.sign);
    }
    Ok(c)
}

/// Class in `basis` of the crossing sum of every whole colouring, in
/// enumeration order.
pub fn chirality_classes(d: &Diagram, table: &BirackTable, basis: &HomologyBasis) -> Result<Vec<ClassCoords>> {
    let wcs = enumerate_whole_colourings(d, table)?;
    let classify = |wc: &WholeColouring| basis.cycle_class(&whole_cycle(d, wc)?);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        wcs.par_iter().map(classify).collect()
    }
    #[cfg(not(feature = "parallel"))]
    wcs.iter().map(classify).collect()
}

/// The classes in `H₃^Q(Q³₃) ≅ Z₃` as values in `{-1, 0, 1}`, sorted.
pub fn chirality_q3(d: &Diagram) -> Result<Vec<i64>> {
    let q3 = Builtin::ThreeColour.build()?;
    let basis = homology_group(&q3, 3, Theory::Q)?;
    let mut out: Vec<i64> = enumerate_whole_colourings(d, &q3)?
        .iter()
        .map(|wc| Ok(basis.cyclic_value(&whole_cycle(d, wc)?)?.expect("cyclic group")))
        .collect::<Result<_>>()?;
    out.sort_unstable();
    Ok(out)
}

/// `Σ sign · (under, over)` at the source corners of a black/white edge
/// colouring, with its class in `H₂^BR(BQ²₁) ≅ Z²`.
pub fn bw_two_cycle(d: &Diagram, ec: &EdgeColouring) -> Result<(Chain, ClassCoords)> {
    let bw = Builtin::BlackWhite.build()?;
    if !ec.is_valid(d, &bw) {
        return Err(KnotError::MalformedInput("not a black/white colouring of this diagram".into()));
    }
    let mut c = Chain::zero(2);
    for x in d.crossings() {
        let (under, over) = x.source_corner_arcs();
        c.add_term(&[ec.colour(under), ec.colour(over)], x.sign);
    }
    if !boundary(&bw, &c)?.is_zero() {
        return Err(KnotError::NotACycle);
    }
    let basis = homology_group(&bw, 2, Theory::BR)?;
    let class = basis.cycle_class(&c)?;
    Ok((c, class))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::enumerate_edge_colourings;
    use crate::diagram::catalog;

    const R: Element = 0;
    const G: Element = 1;
    const B: Element = 2;

    fn anchor() -> Chain {
        Chain::tuple(&[R, B, G]).plus(&[R, R, B], 1).plus(&[R, G, R], 1)
    }

    #[test]
    fn trefoil_anchor_chain() {
        let d = catalog("trefoil_r").unwrap();
        let q3 = Builtin::ThreeColour.build().unwrap();
        let chains: Vec<Chain> =
            enumerate_whole_colourings(&d, &q3).unwrap().iter().map(|w| whole_cycle(&d, w).unwrap()).collect();
        assert!(chains.contains(&anchor()), "{:?}", chains);
        let l = catalog("trefoil_l").unwrap();
        let mirrored: Vec<Chain> =
            enumerate_whole_colourings(&l, &q3).unwrap().iter().map(|w| whole_cycle(&l, w).unwrap()).collect();
        assert!(mirrored.contains(&-&anchor()));
    }

    #[test]
    fn trefoil_chirality() {
        let r = chirality_q3(&catalog("trefoil_r").unwrap()).unwrap();
        assert_eq!(r.iter().filter(|&&x| x == 1).count(), 18);
        assert_eq!(r.iter().filter(|&&x| x == 0).count(), 9);
        let l = chirality_q3(&catalog("trefoil_l").unwrap()).unwrap();
        let mut neg: Vec<i64> = r.iter().map(|x| -x).collect();
        neg.sort_unstable();
        assert_eq!(l, neg);
    }

    #[test]
    fn bw_cycles() {
        let d = catalog("trefoil_r").unwrap();
        let bw = Builtin::BlackWhite.build().unwrap();
        let classes: Vec<ClassCoords> =
            enumerate_edge_colourings(&d, &bw).iter().map(|ec| bw_two_cycle(&d, ec).unwrap().1).collect();
        assert_eq!(classes.len(), 2);
        let u = catalog("unknot0").unwrap();
        for ec in enumerate_edge_colourings(&u, &bw) {
            let (c, class) = bw_two_cycle(&u, &ec).unwrap();
            assert!(c.is_zero() && class.is_zero());
        }
    }
}
