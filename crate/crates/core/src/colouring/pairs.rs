use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{find_isomorphism, BirackTable, Builtin, Element};
use crate::error::{KnotError, Result};

/// Coincidence pattern of a crossing triple `(region, under, over)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    Abc,
    Aba,
    Abb,
    Aab,
    Aaa,
}

impl Pattern {
    pub fn of(p: Element, x: Element, y: Element) -> Pattern {
        match (p == x, x == y, p == y) {
            (true, true, _) => Pattern::Aaa,
            (true, false, _) => Pattern::Aab,
            (false, true, _) => Pattern::Abb,
            (false, false, true) => Pattern::Aba,
            (false, false, false) => Pattern::Abc,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairTableReport {
    pub domain_size: usize,
    pub positive: usize,
    pub negative: usize,
    pub classes: BTreeMap<Pattern, usize>,
}

/// Colourings of a single positive (and negative) crossing by the double of
/// the three-colour quandle, classified by the triple at the source corner.
pub fn pair_table_check(table: &BirackTable) -> Result<PairTableReport> {
    let r3 = Builtin::Dihedral(3).build()?;
    if find_isomorphism(table, &r3).is_none() {
        return Err(KnotError::WrongTable(table.name().to_string()));
    }
    let n = table.size();
    let double = table.double()?;
    let mut classes = BTreeMap::new();
    let mut positive = 0;
    // switch inputs at a positive crossing are (over_in, under_in)
    for (over, under) in double.domain() {
        double.switch(over, under)?;
        let (p, x) = (under / n, under % n);
        let y = over % n;
        *classes.entry(Pattern::of(p, x, y)).or_insert(0) += 1;
        positive += 1;
    }
    // at a negative crossing the incoming pair (under_in, over_in) must be in the image
    let mut negative = 0;
    for under in 0..double.size() {
        for over in 0..double.size() {
            if double.switch_inverse(under, over).is_ok() {
                negative += 1;
            }
        }
    }
    Ok(PairTableReport { domain_size: double.domain_size(), positive, negative, classes })
}
