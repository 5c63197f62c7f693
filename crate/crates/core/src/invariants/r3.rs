use crate::algebra::{BirackTable, Element};
use crate::error::{KnotError, Result};
use crate::homology::Chain;

/// A colouring of the three-strand braid tangle: inbound strand colours from
/// left to right and the colour of the region right of all three strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct R3Colouring {
    pub strands: [Element; 3],
    pub right_region: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct R3Relations {
    /// Colourings counted, one per orbit of the front/back flip when the
    /// quandle is involutory.
    pub colourings: Vec<R3Colouring>,
    /// `σ₁σ₂σ₁` side minus `σ₂σ₁σ₂` side, one per colouring.
    pub relations: Vec<Chain>,
}

/// The triples `(region, under, over)` met while pushing the strands through
/// the positive braid word `word` (generator `i` crosses positions `i, i+1`,
/// the left strand passing over).
pub fn braid_triples(
    table: &BirackTable,
    c: R3Colouring,
    word: &[usize],
) -> Result<Vec<[Element; 3]>> {
    let mut x = c.strands;
    let mut out = Vec::new();
    for &i in word {
        // region right of strand i+1, read off from the right end
        let mut region = c.right_region;
        for k in (i + 2..3).rev() {
            region = table.up(region, x[k])?;
        }
        out.push([region, x[i + 1], x[i]]);
        let (left, right) = table.switch(x[i], x[i + 1])?;
        x[i] = left;
        x[i + 1] = right;
    }
    Ok(out)
}

fn side(table: &BirackTable, c: R3Colouring, word: &[usize]) -> Result<Chain> {
    let mut chain = Chain::zero(3);
    for t in braid_triples(table, c, word)? {
        chain.add_term(&t, 1);
    }
    Ok(chain)
}

/// Reidemeister III relations among crossing triples, one per whole colouring
/// of the all-positive braid tangle `σ₁σ₂σ₁ = σ₂σ₁σ₂`.
///
/// For an involutory quandle the tangle seen from behind is the same tangle
/// with the strand order and region seed reflected; colourings related by
/// this flip describe the same move and are counted once.
pub fn r3_relations(table: &BirackTable) -> Result<R3Relations> {
    if !table.is_quandle() || !table.is_total() {
        return Err(KnotError::TheoryMismatch { theory: "Q", requirement: "a quandle" });
    }
    let n = table.size();
    let involutory = table.is_involutory();
    let mut colourings = Vec::new();
    let mut relations = Vec::new();
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for p in 0..n {
                    let c = R3Colouring { strands: [x1, x2, x3], right_region: p };
                    if involutory {
                        let left_region = table.up(table.up(table.up(p, x3)?, x2)?, x1)?;
                        let flipped = R3Colouring { strands: [x3, x2, x1], right_region: left_region };
                        if flipped < c {
                            continue;
                        }
                    }
                    let rel = &side(table, c, &[0, 1, 0])? - &side(table, c, &[1, 0, 1])?;
                    colourings.push(c);
                    relations.push(rel);
                }
            }
        }
    }
    Ok(R3Relations { colourings, relations })
}
