use serde::Serialize;

use super::Diagram;

/// `White` keeps a semi-arc's orientation, `Black` reverses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcColour {
    White,
    Black,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingClass {
    Sink,
    Source,
    Saddle,
}

/// A colouring of semi-arcs alternating along every component, and the
/// resulting classification of classical crossings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientationAnalysis {
    pub colours: Vec<ArcColour>,
    /// Indexed by vertex; `None` at virtual crossings.
    pub classes: Vec<Option<CrossingClass>>,
    pub sinks: usize,
    pub sources: usize,
    pub saddles: usize,
}

impl OrientationAnalysis {
    pub fn is_good(&self) -> bool {
        self.sinks == 0 && self.sources == 0
    }
}

impl Diagram {
    /// Every alternate orientation, two choices per component, ordered by the
    /// choice vector with component 0 most significant. Empty when some
    /// component has an odd number of semi-arcs.
    pub fn alternate_orientations(&self) -> Vec<OrientationAnalysis> {
        // a closed semi-arc alternates trivially; otherwise the count must be even
        let alternates = self.components.iter().all(|comp| {
            let closed = self.semi_arcs[comp.semi_arcs[0]].tail.is_none();
            closed || comp.semi_arcs.len() % 2 == 0
        });
        if !alternates {
            return Vec::new();
        }
        let c = self.components.len();
        (0..1usize << c)
            .map(|mask| {
                let mut colours = vec![ArcColour::White; self.semi_arcs.len()];
                for (ci, comp) in self.components.iter().enumerate() {
                    let flip = (mask >> (c - 1 - ci)) & 1;
                    for (j, &s) in comp.semi_arcs.iter().enumerate() {
                        colours[s] = if (j + flip).is_multiple_of(2) { ArcColour::White } else { ArcColour::Black };
                    }
                }
                self.classify(colours)
            })
            .collect()
    }

    fn classify(&self, colours: Vec<ArcColour>) -> OrientationAnalysis {
        let mut classes = vec![None; self.vertices.len()];
        let (mut sinks, mut sources, mut saddles) = (0, 0, 0);
        for c in self.crossings() {
            // alternation makes the out-arc of each strand point the same way
            // (relative to the crossing) as its in-arc
            let incoming = [c.under_in, c.over_in].iter().filter(|&&s| colours[s] == ArcColour::White).count();
            let class = match incoming {
                2 => {
                    sinks += 1;
                    CrossingClass::Sink
                }
                0 => {
                    sources += 1;
                    CrossingClass::Source
                }
                _ => {
                    saddles += 1;
                    CrossingClass::Saddle
                }
            };
            classes[c.vertex] = Some(class);
        }
        OrientationAnalysis { colours, classes, sinks, sources, saddles }
    }
}
