use std::collections::BTreeMap;

use super::{CrossingKind, Dart, Diagram, DiagramFile, Vertex};
use crate::error::{KnotError, Result};

/// A crossing in planar-diagram notation: four edge labels listed
/// counterclockwise. Classical crossings start at the incoming under edge;
/// virtual crossings may start anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdCrossing {
    X([usize; 4]),
    V([usize; 4]),
}

impl PdCrossing {
    fn labels(&self) -> [usize; 4] {
        match *self {
            PdCrossing::X(l) | PdCrossing::V(l) => l,
        }
    }
}

impl Diagram {
    /// Builds a diagram from PD notation. Vertex `i` gets darts `4i..4i+4`; edge
    /// orientations are propagated from the under strands, and crossing signs
    /// are read off the rotation.
    pub fn from_pd(name: &str, crossings: &[PdCrossing], outer_face_dart: Option<Dart>) -> Result<Diagram> {
        let mut occurrences: BTreeMap<usize, Vec<Dart>> = BTreeMap::new();
        for (v, c) in crossings.iter().enumerate() {
            for (slot, &label) in c.labels().iter().enumerate() {
                occurrences.entry(label).or_default().push(4 * v + slot);
            }
        }
        if let Some((label, _)) = occurrences.iter().find(|(_, ds)| ds.len() != 2) {
            return Err(KnotError::MalformedInput(format!("PD label {label} must occur exactly twice")));
        }
        let mate = |d: Dart| {
            let ds = &occurrences[&crossings[d / 4].labels()[d % 4]];
            if ds[0] == d {
                ds[1]
            } else {
                ds[0]
            }
        };
        let opposite = |d: Dart| 4 * (d / 4) + (d % 4 + 2) % 4;

        // outgoing[d]: Some(true) if d is a tail
        let mut outgoing: Vec<Option<bool>> = vec![None; 4 * crossings.len()];
        let mut stack = Vec::new();
        let assign = |d: Dart, out: bool, outgoing: &mut Vec<Option<bool>>, stack: &mut Vec<Dart>| -> Result<()> {
            match outgoing[d] {
                Some(o) if o != out => Err(KnotError::BadStrandPairing(format!("PD edge orientations clash at dart {d}"))),
                Some(_) => Ok(()),
                None => {
                    outgoing[d] = Some(out);
                    stack.push(d);
                    Ok(())
                }
            }
        };
        for (v, c) in crossings.iter().enumerate() {
            if let PdCrossing::X(_) = c {
                assign(4 * v, false, &mut outgoing, &mut stack)?;
            }
        }
        loop {
            while let Some(d) = stack.pop() {
                let out = outgoing[d].expect("assigned");
                assign(mate(d), !out, &mut outgoing, &mut stack)?;
                assign(opposite(d), !out, &mut outgoing, &mut stack)?;
            }
            // strands with no under passage get an arbitrary direction
            match outgoing.iter().position(Option::is_none) {
                Some(d) => assign(d, true, &mut outgoing, &mut stack)?,
                None => break,
            }
        }

        let vertices = crossings
            .iter()
            .enumerate()
            .map(|(v, c)| {
                let darts = [4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3];
                match c {
                    PdCrossing::V(_) => Vertex { kind: CrossingKind::Virtual, darts, under_in: None },
                    PdCrossing::X(_) => {
                        let kind = if outgoing[4 * v + 1] == Some(true) {
                            CrossingKind::Positive
                        } else {
                            CrossingKind::Negative
                        };
                        Vertex { kind, darts, under_in: Some(4 * v) }
                    }
                }
            })
            .collect();
        let edges = occurrences
            .values()
            .map(|ds| if outgoing[ds[0]] == Some(true) { [ds[0], ds[1]] } else { [ds[1], ds[0]] })
            .collect();
        Diagram::from_file(DiagramFile { name: name.to_string(), vertices, edges, outer_face_dart, free_loops: 0 })
    }
}
