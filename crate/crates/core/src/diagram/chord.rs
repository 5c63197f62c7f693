use super::Diagram;

/// A classical crossing seen as a chord joining its two visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chord {
    pub vertex: usize,
    /// `(circle, position)` of the over visit.
    pub over: (usize, usize),
    /// `(circle, position)` of the under visit.
    pub under: (usize, usize),
}

impl Chord {
    /// Both ends lie on the same circle.
    pub fn is_interior(&self) -> bool {
        self.over.0 == self.under.0
    }
}

/// One circle per component, each listing the classical crossings visited in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordDiagram {
    pub circles: Vec<Vec<usize>>,
    pub chords: Vec<Chord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl ChordDiagram {
    pub fn chord(&self, vertex: usize) -> Option<&Chord> {
        self.chords.iter().find(|c| c.vertex == vertex)
    }

    /// Parity of the number of interior chords interleaving the given interior
    /// chord. `None` for exterior chords and unknown vertices.
    pub fn parity(&self, vertex: usize) -> Option<Parity> {
        let c = self.chord(vertex)?;
        if !c.is_interior() {
            return None;
        }
        let (lo, hi) = ordered(c.over.1, c.under.1);
        let inside = |p: usize| lo < p && p < hi;
        let count = self
            .chords
            .iter()
            .filter(|o| o.vertex != vertex && o.is_interior() && o.over.0 == c.over.0)
            .filter(|o| inside(o.over.1) != inside(o.under.1))
            .count();
        Some(if count % 2 == 1 { Parity::Odd } else { Parity::Even })
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Diagram {
    pub fn chord_diagram(&self) -> ChordDiagram {
        let mut circles = Vec::new();
        let mut ends: Vec<[Option<(usize, usize)>; 2]> = vec![[None, None]; self.vertices.len()];
        for (ci, comp) in self.components.iter().enumerate() {
            let mut circle = Vec::new();
            for p in &comp.passages {
                let vertex = &self.vertices[p.vertex];
                if !vertex.kind.is_classical() {
                    continue;
                }
                let role = usize::from(vertex.under_in == Some(p.in_dart));
                ends[p.vertex][role] = Some((ci, circle.len()));
                circle.push(p.vertex);
            }
            circles.push(circle);
        }
        let chords = self
            .crossings()
            .map(|c| {
                let [over, under] = ends[c.vertex];
                Chord { vertex: c.vertex, over: over.expect("over visit"), under: under.expect("under visit") }
            })
            .collect();
        ChordDiagram { circles, chords }
    }
}
