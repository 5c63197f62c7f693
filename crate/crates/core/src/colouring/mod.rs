//! Edge colourings and whole (edge plus region) colourings of diagrams.

mod pairs;

pub use pairs::{pair_table_check, PairTableReport, Pattern};

use std::collections::VecDeque;

use serde::Serialize;

use crate::algebra::{BirackTable, Element};
use crate::diagram::{CrossingArcs, CrossingKind, Diagram, Faces};
use crate::error::Result;

/// Colours of the outgoing strands at a classical crossing, `(out_over, out_under)`.
///
/// Positive: `out_under = in_under^{in_over}`, `out_over = (in_over)_{in_under}`,
/// i.e. `(out_under, out_over) = S(in_over, in_under)`. Negative crossings use
/// the inverse relation `S(out_over, out_under) = (in_under, in_over)`.
pub fn crossing_rule(
    table: &BirackTable,
    kind: CrossingKind,
    in_over: Element,
    in_under: Element,
) -> Result<(Element, Element)> {
    match kind {
        CrossingKind::Positive => {
            let (out_under, out_over) = table.switch(in_over, in_under)?;
            Ok((out_over, out_under))
        }
        CrossingKind::Negative => table.switch_inverse(in_under, in_over),
        CrossingKind::Virtual => Ok((in_over, in_under)),
    }
}

/// The switch relation at a crossing, `S(inputs) = outputs`, as semi-arc ids.
fn switch_arcs(c: &CrossingArcs) -> ([usize; 2], [usize; 2]) {
    if c.sign > 0 {
        ([c.over_in, c.under_in], [c.under_out, c.over_out])
    } else {
        ([c.over_out, c.under_out], [c.under_in, c.over_in])
    }
}

/// Colour of each semi-arc, indexed by semi-arc id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColouring(pub Vec<Element>);

impl EdgeColouring {
    pub fn colour(&self, arc: usize) -> Element {
        self.0[arc]
    }

    pub fn is_valid(&self, d: &Diagram, table: &BirackTable) -> bool {
        self.0.len() == d.semi_arcs().len()
            && self.0.iter().all(|&x| x < table.size())
            && d.crossings().all(|c| {
                let kind = if c.sign > 0 { CrossingKind::Positive } else { CrossingKind::Negative };
                crossing_rule(table, kind, self.0[c.over_in], self.0[c.under_in])
                    == Ok((self.0[c.over_out], self.0[c.under_out]))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WholeColouring {
    pub edges: EdgeColouring,
    /// Colour of each face, indexed by face id.
    pub faces: Vec<Element>,
}

struct Search<'a> {
    table: &'a BirackTable,
    arcs: usize,
    // crossings touching each semi-arc
    touching: Vec<Vec<([usize; 2], [usize; 2])>>,
}

impl<'a> Search<'a> {
    fn new(d: &Diagram, table: &'a BirackTable) -> Self {
        let arcs = d.semi_arcs().len();
        let mut touching = vec![Vec::new(); arcs];
        for c in d.crossings() {
            let rel = switch_arcs(c);
            for s in [c.over_in, c.under_in, c.over_out, c.under_out] {
                if !touching[s].contains(&rel) {
                    touching[s].push(rel);
                }
            }
        }
        Search { table, arcs, touching }
    }

    /// Assigns `value` to `arc` and propagates; false on conflict.
    fn assign(&self, colours: &mut [Option<Element>], arc: usize, value: Element) -> bool {
        let mut queue = VecDeque::from([(arc, value)]);
        while let Some((s, v)) = queue.pop_front() {
            match colours[s] {
                Some(w) if w != v => return false,
                Some(_) => continue,
                None => colours[s] = Some(v),
            }
            for &([p, q], [r, t]) in &self.touching[s] {
                match (colours[p], colours[q], colours[r], colours[t]) {
                    (Some(a), Some(b), _, _) => match self.table.switch(a, b) {
                        Ok((x, y)) => queue.extend([(r, x), (t, y)]),
                        Err(_) => return false,
                    },
                    (_, _, Some(x), Some(y)) => match self.table.switch_inverse(x, y) {
                        Ok((a, b)) => queue.extend([(p, a), (q, b)]),
                        Err(_) => return false,
                    },
                    _ => {}
                }
            }
        }
        true
    }

    fn run(&self, colours: &mut [Option<Element>], out: &mut Vec<EdgeColouring>) {
        let Some(next) = colours.iter().position(Option::is_none) else {
            out.push(EdgeColouring(colours.iter().map(|c| c.expect("assigned")).collect()));
            return;
        };
        for v in 0..self.table.size() {
            let mut trial = colours.to_vec();
            if self.assign(&mut trial, next, v) {
                self.run(&mut trial, out);
            }
        }
    }

    fn branch(&self, first: Element) -> Vec<EdgeColouring> {
        let mut colours = vec![None; self.arcs];
        let mut out = Vec::new();
        if self.assign(&mut colours, 0, first) {
            self.run(&mut colours, &mut out);
        }
        out
    }
}

/// Every edge colouring, in lexicographic order of the colour vectors.
pub fn enumerate_edge_colourings(d: &Diagram, table: &BirackTable) -> Vec<EdgeColouring> {
    let search = Search::new(d, table);
    if search.arcs == 0 {
        return vec![EdgeColouring(Vec::new())];
    }
    let firsts: Vec<Element> = table.elements().collect();
    #[cfg(feature = "parallel")]
    let parts: Vec<Vec<EdgeColouring>> = {
        use rayon::prelude::*;
        firsts.par_iter().map(|&v| search.branch(v)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Vec<EdgeColouring>> = firsts.iter().map(|&v| search.branch(v)).collect();
    parts.into_iter().flatten().collect()
}

pub fn count_colourings(d: &Diagram, table: &BirackTable) -> usize {
    enumerate_edge_colourings(d, table).len()
}

/// Transmits a face colour across semi-arcs: along an arc coloured `b`, the
/// right face `a` and the left face `a^b`. `None` on an inconsistency.
pub fn extend_to_whole(
    d: &Diagram,
    table: &BirackTable,
    ec: &EdgeColouring,
    seed_face: usize,
    seed_colour: Element,
) -> Result<Option<WholeColouring>> {
    let faces = d.faces()?;
    Ok(transmit(&faces, table, ec, seed_face, seed_colour))
}

fn transmit(
    faces: &Faces,
    table: &BirackTable,
    ec: &EdgeColouring,
    seed_face: usize,
    seed_colour: Element,
) -> Option<WholeColouring> {
    let mut colour: Vec<Option<Element>> = vec![None; faces.count];
    colour[seed_face] = Some(seed_colour);
    let mut by_face = vec![Vec::new(); faces.count];
    for s in 0..ec.0.len() {
        by_face[faces.left[s]].push(s);
        by_face[faces.right[s]].push(s);
    }
    let mut queue = VecDeque::from([seed_face]);
    while let Some(f) = queue.pop_front() {
        for &s in &by_face[f] {
            let (l, r, b) = (faces.left[s], faces.right[s], ec.0[s]);
            let (target, value) = if f == r {
                (l, table.up(colour[r]?, b).ok()?)
            } else {
                (r, table.up_inv(colour[l]?, b).ok()?)
            };
            match colour[target] {
                None => {
                    colour[target] = Some(value);
                    queue.push_back(target);
                }
                Some(existing) if existing != value => return None,
                Some(_) => {}
            }
        }
    }
    let colour: Vec<Element> = colour.into_iter().collect::<Option<_>>()?;
    // every arc, including ones bordering a single face twice
    (0..ec.0.len())
        .all(|s| table.up(colour[faces.right[s]], ec.0[s]) == Ok(colour[faces.left[s]]))
        .then(|| WholeColouring { edges: ec.clone(), faces: colour })
}

/// Every whole colouring: edge colourings in order, each with every seed colour
/// for face 0 that transmits consistently.
pub fn enumerate_whole_colourings(d: &Diagram, table: &BirackTable) -> Result<Vec<WholeColouring>> {
    let faces = d.faces()?;
    Ok(enumerate_edge_colourings(d, table)
        .into_iter()
        .flat_map(|ec| {
            table.elements().filter_map(|seed| transmit(&faces, table, &ec, 0, seed)).collect::<Vec<_>>()
        })
        .collect())
}

/// The pairs `(right face colour, edge colour)` of a whole colouring, as
/// elements of the double.
pub fn as_pair_colouring(d: &Diagram, table: &BirackTable, wc: &WholeColouring) -> Result<EdgeColouring> {
    let faces = d.faces()?;
    let n = table.size();
    Ok(EdgeColouring((0..wc.edges.0.len()).map(|s| wc.faces[faces.right[s]] * n + wc.edges.0[s]).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColouringFile {
    pub diagram: String,
    pub birack: String,
    pub edge: std::collections::BTreeMap<String, Element>,
    pub faces: Option<std::collections::BTreeMap<String, Element>>,
}

impl ColouringFile {
    pub fn new(d: &Diagram, table: &BirackTable, edges: &EdgeColouring, faces: Option<&[Element]>) -> Self {
        let index = |xs: &[Element]| xs.iter().enumerate().map(|(i, &x)| (i.to_string(), x)).collect();
        ColouringFile {
            diagram: d.name().to_string(),
            birack: table.name().to_string(),
            edge: index(&edges.0),
            faces: faces.map(index),
        }
    }
}
