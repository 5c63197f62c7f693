//! Oriented classical and virtual knot diagrams as 4-valent combinatorial maps.
//!
//! Every vertex lists its four darts counterclockwise; the through-strands join
//! opposite darts (slots 0,2 and 1,3). Edges are ordered `[out, in]` dart pairs.
//! At a classical crossing the over strand leaves through the slot right after
//! the under strand's incoming slot (counterclockwise) exactly when the crossing
//! is positive, i.e. the over direction is the under direction turned clockwise.
//! This is the usual right-handed crossing, and it is the orientation under
//! which the switch `S(over_in, under_in) = (under_out, over_out)` agrees with
//! the region rule "left face = right face ^ edge colour".

mod catalog;
mod chord;
mod faces;
mod orientation;
mod pd;

pub use catalog::{catalog, catalog_names, equivalence_pairs};
pub use chord::{Chord, ChordDiagram, Parity};
pub use faces::{Faces, Sidedness};
pub use orientation::{ArcColour, CrossingClass, OrientationAnalysis};
pub use pd::PdCrossing;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

pub type Dart = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossingKind {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "v")]
    Virtual,
}

impl CrossingKind {
    pub fn sign(self) -> i64 {
        match self {
            CrossingKind::Positive => 1,
            CrossingKind::Negative => -1,
            CrossingKind::Virtual => 0,
        }
    }

    pub fn is_classical(self) -> bool {
        self != CrossingKind::Virtual
    }

    fn flipped(self) -> Self {
        match self {
            CrossingKind::Positive => CrossingKind::Negative,
            CrossingKind::Negative => CrossingKind::Positive,
            CrossingKind::Virtual => CrossingKind::Virtual,
        }
    }
}

impl fmt::Display for CrossingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossingKind::Positive => "+",
            CrossingKind::Negative => "-",
            CrossingKind::Virtual => "v",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Vertex {
    pub kind: CrossingKind,
    pub darts: [Dart; 4],
    pub under_in: Option<Dart>,
}

/// On-disk diagram format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub name: String,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Dart; 2]>,
    pub outer_face_dart: Option<Dart>,
    pub free_loops: usize,
}

/// A segment between consecutive classical passages. Virtual crossings do not
/// cut semi-arcs. Closed semi-arcs (no classical passage) have no endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiArc {
    pub id: usize,
    /// Outgoing dart at the classical crossing where the semi-arc starts.
    pub tail: Option<Dart>,
    /// Incoming dart at the classical crossing where it ends.
    pub head: Option<Dart>,
    pub component: usize,
    /// Virtual vertices passed, in order.
    pub virtual_passages: Vec<usize>,
}

/// Semi-arcs meeting at a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingArcs {
    pub vertex: usize,
    pub sign: i64,
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
}

impl CrossingArcs {
    /// The under and over semi-arcs bordering the source corner, the corner
    /// lying to the right of both strands.
    pub fn source_corner_arcs(&self) -> (usize, usize) {
        if self.sign > 0 {
            (self.under_in, self.over_out)
        } else {
            (self.under_out, self.over_in)
        }
    }

    /// A semi-arc whose right-hand face is the source corner.
    pub fn source_corner_reference(&self) -> usize {
        if self.sign > 0 {
            self.under_in
        } else {
            self.under_out
        }
    }
}

/// One traversal of a strand through a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub vertex: usize,
    pub in_dart: Dart,
    pub out_dart: Dart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Passages in traversal order, starting at the canonical start.
    pub passages: Vec<Passage>,
    /// Semi-arcs in traversal order.
    pub semi_arcs: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct DartInfo {
    vertex: usize,
    slot: usize,
    outgoing: bool,
    // dart at the other end of this dart's edge
    mate: Dart,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    name: String,
    vertices: Vec<Vertex>,
    edges: Vec<[Dart; 2]>,
    outer_face_dart: Option<Dart>,
    free_loops: usize,
    darts: BTreeMap<Dart, DartInfo>,
    semi_arcs: Vec<SemiArc>,
    components: Vec<Component>,
    crossings: Vec<Option<CrossingArcs>>,
    // semi-arc leaving / entering at a classical dart
    arc_out: BTreeMap<Dart, usize>,
    arc_in: BTreeMap<Dart, usize>,
}

impl Diagram {
    pub fn from_file(file: DiagramFile) -> Result<Self> {
        let DiagramFile { name, vertices, edges, outer_face_dart, free_loops } = file;

        let mut darts = BTreeMap::new();
        for (v, vertex) in vertices.iter().enumerate() {
            for (slot, &d) in vertex.darts.iter().enumerate() {
                let info = DartInfo { vertex: v, slot, outgoing: false, mate: usize::MAX };
                if darts.insert(d, info).is_some() {
                    return Err(KnotError::InconsistentRotation(format!("dart {d} used twice")));
                }
            }
        }
        for &[out, inc] in &edges {
            for (d, outgoing, mate) in [(out, true, inc), (inc, false, out)] {
                let info = darts
                    .get_mut(&d)
                    .ok_or_else(|| KnotError::InconsistentRotation(format!("edge uses unknown dart {d}")))?;
                if info.mate != usize::MAX {
                    return Err(KnotError::InconsistentRotation(format!("dart {d} lies on two edges")));
                }
                info.outgoing = outgoing;
                info.mate = mate;
            }
        }
        if let Some((d, _)) = darts.iter().find(|(_, i)| i.mate == usize::MAX) {
            return Err(KnotError::InconsistentRotation(format!("dart {d} lies on no edge")));
        }

        for (v, vertex) in vertices.iter().enumerate() {
            let out = |slot: usize| darts[&vertex.darts[slot]].outgoing;
            for slot in 0..2 {
                if out(slot) == out(slot + 2) {
                    return Err(KnotError::BadStrandPairing(format!(
                        "vertex {v}: opposite darts {} and {} must be one in, one out",
                        vertex.darts[slot],
                        vertex.darts[slot + 2]
                    )));
                }
            }
            match (vertex.kind, vertex.under_in) {
                (CrossingKind::Virtual, None) => {}
                (CrossingKind::Virtual, Some(_)) => {
                    return Err(KnotError::BadStrandPairing(format!("virtual vertex {v} has an under strand")))
                }
                (_, None) => {
                    return Err(KnotError::BadStrandPairing(format!("classical vertex {v} lacks under_in")))
                }
                (kind, Some(u)) => {
                    let slot = vertex.darts.iter().position(|&d| d == u).ok_or_else(|| {
                        KnotError::BadStrandPairing(format!("vertex {v}: under_in {u} is not one of its darts"))
                    })?;
                    if out(slot) {
                        return Err(KnotError::BadStrandPairing(format!("vertex {v}: under_in {u} is outgoing")));
                    }
                    let geometric = if out((slot + 1) % 4) { CrossingKind::Positive } else { CrossingKind::Negative };
                    if geometric != kind {
                        return Err(KnotError::BadStrandPairing(format!(
                            "vertex {v}: kind {kind} does not match its rotation (expected {geometric})"
                        )));
                    }
                }
            }
        }
        if let Some(d) = outer_face_dart {
            match darts.get(&d) {
                Some(i) if vertices[i.vertex].kind.is_classical() => {}
                _ => {
                    return Err(KnotError::MalformedInput(format!(
                        "outer_face_dart {d} must be a dart of a classical crossing"
                    )))
                }
            }
        }

        let mut diagram = Diagram {
            name,
            vertices,
            edges,
            outer_face_dart,
            free_loops,
            darts,
            semi_arcs: Vec::new(),
            components: Vec::new(),
            crossings: Vec::new(),
            arc_out: BTreeMap::new(),
            arc_in: BTreeMap::new(),
        };
        diagram.build_topology();
        Ok(diagram)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DiagramFile =
            serde_json::from_str(text).map_err(|e| KnotError::MalformedInput(e.to_string()))?;
        Self::from_file(file)
    }

    pub fn to_file(&self) -> DiagramFile {
        DiagramFile {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
            outer_face_dart: self.outer_face_dart,
            free_loops: self.free_loops,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("diagram file serializes")
    }

    fn opposite(&self, d: Dart) -> Dart {
        let info = self.darts[&d];
        self.vertices[info.vertex].darts[(info.slot + 2) % 4]
    }

    fn is_classical_dart(&self, d: Dart) -> bool {
        self.vertices[self.darts[&d].vertex].kind.is_classical()
    }

    fn build_topology(&mut self) {
        // walk each strand cycle once, edge by edge (identified by out-darts)
        let mut visited_out = BTreeMap::new();
        let mut cycles: Vec<Vec<Passage>> = Vec::new();
        for &[start, _] in &self.edges {
            if visited_out.contains_key(&start) {
                continue;
            }
            let mut passages = Vec::new();
            let mut out = start;
            loop {
                visited_out.insert(out, cycles.len());
                let inc = self.darts[&out].mate;
                let next = self.opposite(inc);
                passages.push(Passage { vertex: self.darts[&inc].vertex, in_dart: inc, out_dart: next });
                out = next;
                if out == start {
                    break;
                }
            }
            cycles.push(passages);
        }

        // canonical start: the lowest classical vertex (its over passage when both
        // passages are on this component), else the lowest virtual vertex
        let mut keyed: Vec<(usize, usize, Vec<Passage>)> = cycles
            .into_iter()
            .map(|mut ps| {
                let classical = ps.iter().filter(|p| self.vertices[p.vertex].kind.is_classical()).map(|p| p.vertex).min();
                let (rank, v) = match classical {
                    Some(v) => (0, v),
                    None => (1, ps.iter().map(|p| p.vertex).min().expect("nonempty cycle")),
                };
                let candidates: Vec<usize> = (0..ps.len()).filter(|&i| ps[i].vertex == v).collect();
                let start = if rank == 0 {
                    *candidates
                        .iter()
                        .find(|&&i| self.vertices[v].under_in != Some(ps[i].in_dart))
                        .unwrap_or(&candidates[0])
                } else {
                    candidates[0]
                };
                ps.rotate_left(start);
                (rank, v, ps)
            })
            .collect();
        keyed.sort_by_key(|(rank, v, _)| (*rank, *v));

        let mut semi_arcs = Vec::new();
        let mut components = Vec::new();
        for (ci, (_, _, passages)) in keyed.into_iter().enumerate() {
            let classical: Vec<usize> =
                (0..passages.len()).filter(|&i| self.vertices[passages[i].vertex].kind.is_classical()).collect();
            let mut arcs = Vec::new();
            if classical.is_empty() {
                let id = semi_arcs.len();
                semi_arcs.push(SemiArc {
                    id,
                    tail: None,
                    head: None,
                    component: ci,
                    virtual_passages: passages.iter().map(|p| p.vertex).collect(),
                });
                arcs.push(id);
            } else {
                for (k, &i) in classical.iter().enumerate() {
                    let j = classical[(k + 1) % classical.len()];
                    let mut virtual_passages = Vec::new();
                    let mut t = (i + 1) % passages.len();
                    while t != j {
                        virtual_passages.push(passages[t].vertex);
                        t = (t + 1) % passages.len();
                    }
                    let id = semi_arcs.len();
                    let (tail, head) = (passages[i].out_dart, passages[j].in_dart);
                    self.arc_out.insert(tail, id);
                    self.arc_in.insert(head, id);
                    semi_arcs.push(SemiArc {
                        id,
                        tail: Some(tail),
                        head: Some(head),
                        component: ci,
                        virtual_passages,
                    });
                    arcs.push(id);
                }
            }
            components.push(Component { passages, semi_arcs: arcs });
        }
        for _ in 0..self.free_loops {
            let id = semi_arcs.len();
            let ci = components.len();
            semi_arcs.push(SemiArc { id, tail: None, head: None, component: ci, virtual_passages: Vec::new() });
            components.push(Component { passages: Vec::new(), semi_arcs: vec![id] });
        }

        self.crossings = self
            .vertices
            .iter()
            .enumerate()
            .map(|(v, vertex)| {
                let u = vertex.under_in?;
                let slot = self.darts[&u].slot;
                let over_in = if self.darts[&vertex.darts[(slot + 1) % 4]].outgoing {
                    vertex.darts[(slot + 3) % 4]
                } else {
                    vertex.darts[(slot + 1) % 4]
                };
                Some(CrossingArcs {
                    vertex: v,
                    sign: vertex.kind.sign(),
                    under_in: self.arc_in[&u],
                    under_out: self.arc_out[&self.opposite(u)],
                    over_in: self.arc_in[&over_in],
                    over_out: self.arc_out[&self.opposite(over_in)],
                })
            })
            .collect();
        self.semi_arcs = semi_arcs;
        self.components = components;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[[Dart; 2]] {
        &self.edges
    }

    pub fn outer_face_dart(&self) -> Option<Dart> {
        self.outer_face_dart
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn semi_arcs(&self) -> &[SemiArc] {
        &self.semi_arcs
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Classical crossings with their semi-arcs, in vertex order.
    pub fn crossings(&self) -> impl Iterator<Item = &CrossingArcs> {
        self.crossings.iter().flatten()
    }

    pub fn crossing(&self, vertex: usize) -> Option<&CrossingArcs> {
        self.crossings.get(vertex)?.as_ref()
    }

    pub fn classical_count(&self) -> usize {
        self.crossings().count()
    }

    pub fn virtual_count(&self) -> usize {
        self.vertices.len() - self.classical_count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings().map(|c| c.sign).sum()
    }

    /// Reflection in a line of the page: reverses every rotation and flips every
    /// classical sign. Over/under information and edges are kept.
    pub fn mirror(&self) -> Diagram {
        let name = match self.name.strip_prefix("mirror(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("mirror({})", self.name),
        };
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                kind: v.kind.flipped(),
                darts: [v.darts[0], v.darts[3], v.darts[2], v.darts[1]],
                under_in: v.under_in,
            })
            .collect();
        Diagram::from_file(DiagramFile {
            name,
            vertices,
            edges: self.edges.clone(),
            outer_face_dart: self.outer_face_dart,
            free_loops: self.free_loops,
        })
        .expect("mirror of a valid diagram is valid")
    }

    /// Signed O/U Gauss code, one word per component joined by `", "`.
    /// Classical crossings are numbered by first appearance (`O3+`, `U1-`),
    /// virtual crossings separately (`V1`).
    pub fn gauss_code(&self) -> String {
        let mut classical_label = BTreeMap::new();
        let mut virtual_label = BTreeMap::new();
        self.components
            .iter()
            .map(|c| {
                let mut word = String::new();
                for p in &c.passages {
                    let vertex = &self.vertices[p.vertex];
                    if vertex.kind.is_classical() {
                        let next = classical_label.len() + 1;
                        let label = *classical_label.entry(p.vertex).or_insert(next);
                        let role = if vertex.under_in == Some(p.in_dart) { 'U' } else { 'O' };
                        word.push_str(&format!("{role}{label}{}", vertex.kind));
                    } else {
                        let next = virtual_label.len() + 1;
                        let label = *virtual_label.entry(p.vertex).or_insert(next);
                        word.push_str(&format!("V{label}"));
                    }
                }
                word
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}
