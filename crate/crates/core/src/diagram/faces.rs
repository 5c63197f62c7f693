use std::collections::{BTreeMap, VecDeque};

use super::{Dart, Diagram};
use crate::error::{KnotError, Result};

/// Boundary cycles of the ribbon graph obtained by splicing out virtual
/// crossings. Face 0 is the outer face when one is designated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub count: usize,
    dart_face: BTreeMap<Dart, usize>,
    /// Face on the left of each semi-arc.
    pub left: Vec<usize>,
    /// Face on the right of each semi-arc.
    pub right: Vec<usize>,
    /// Darts in each face boundary, in traversal order.
    pub boundaries: Vec<Vec<Dart>>,
}

impl Faces {
    /// The face counterclockwise-after dart `d` at its vertex, i.e. the corner
    /// between `d` and the next dart in the rotation.
    pub fn corner(&self, d: Dart) -> usize {
        self.dart_face[&d]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Sidedness {
    /// Every semi-arc has distinct faces on its two sides.
    pub two_sided: bool,
    /// Every classical crossing touches four distinct faces.
    pub irreducible: bool,
}

impl Diagram {
    /// The dart at the far end of the semi-arc through classical dart `d`.
    fn arc_mate(&self, d: Dart) -> Dart {
        let arcs = &self.semi_arcs;
        match self.arc_out.get(&d) {
            Some(&s) => arcs[s].head.expect("open semi-arc"),
            None => arcs[self.arc_in[&d]].tail.expect("open semi-arc"),
        }
    }

    fn ensure_connected(&self) -> Result<()> {
        let classical: Vec<usize> = self.crossings().map(|c| c.vertex).collect();
        if classical.is_empty() {
            return if self.semi_arcs.len() == 1 { Ok(()) } else { Err(KnotError::Disconnected) };
        }
        if self.semi_arcs.iter().any(|s| s.tail.is_none()) {
            return Err(KnotError::Disconnected);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([classical[0]]);
        seen[classical[0]] = true;
        while let Some(v) = queue.pop_front() {
            for &d in &self.vertices[v].darts {
                let w = self.darts[&self.arc_mate(d)].vertex;
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if classical.iter().all(|&v| seen[v]) {
            Ok(())
        } else {
            Err(KnotError::Disconnected)
        }
    }

    /// Faces of the underlying ribbon graph. A lone closed curve has two faces,
    /// face 0 on its right and face 1 on its left.
    pub fn faces(&self) -> Result<Faces> {
        self.ensure_connected()?;
        if self.crossings().next().is_none() {
            return Ok(Faces {
                count: 2,
                dart_face: BTreeMap::new(),
                left: vec![1],
                right: vec![0],
                boundaries: vec![Vec::new(), Vec::new()],
            });
        }
        // next(d): go along the semi-arc, then turn to the previous dart in the
        // rotation at the far vertex; this keeps the face on the left
        let next = |d: Dart| {
            let m = self.arc_mate(d);
            let info = self.darts[&m];
            self.vertices[info.vertex].darts[(info.slot + 3) % 4]
        };
        let classical_darts: Vec<Dart> =
            self.darts.keys().copied().filter(|&d| self.is_classical_dart(d)).collect();
        let mut order = classical_darts.clone();
        if let Some(outer) = self.outer_face_dart {
            order.retain(|&d| d != outer);
            order.insert(0, outer);
        }
        let mut dart_face = BTreeMap::new();
        let mut boundaries = Vec::new();
        for start in order {
            if dart_face.contains_key(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                dart_face.insert(d, boundaries.len());
                cycle.push(d);
                d = next(d);
                if d == start {
                    break;
                }
            }
            boundaries.push(cycle);
        }
        let left = self.semi_arcs.iter().map(|s| dart_face[&s.tail.expect("open")]).collect();
        let right = self.semi_arcs.iter().map(|s| dart_face[&s.head.expect("open")]).collect();
        Ok(Faces { count: boundaries.len(), dart_face, left, right, boundaries })
    }

    /// Genus of the supporting surface, `(2 - V + E - F) / 2`.
    pub fn genus(&self) -> Result<usize> {
        let f = self.faces()?;
        // a lone closed curve counts as one vertex and one edge
        let v = self.classical_count().max(1) as i64;
        let e = self.semi_arcs.len() as i64;
        let chi2 = 2 - v + e - f.count as i64;
        debug_assert!(chi2 >= 0 && chi2 % 2 == 0);
        Ok((chi2 / 2) as usize)
    }

    pub fn sidedness(&self) -> Result<Sidedness> {
        let f = self.faces()?;
        let two_sided = (0..self.semi_arcs.len()).all(|s| f.left[s] != f.right[s]);
        let irreducible = self.crossings().all(|c| {
            let mut corners: Vec<usize> = self.vertices[c.vertex].darts.iter().map(|&d| f.corner(d)).collect();
            corners.sort_unstable();
            corners.dedup();
            corners.len() == 4
        });
        Ok(Sidedness { two_sided, irreducible })
    }

    /// Black/white colouring of faces with the two sides of every semi-arc
    /// coloured differently, face 0 white (`false`). `None` when impossible.
    pub fn chessboard(&self) -> Result<Option<Vec<bool>>> {
        let f = self.faces()?;
        let mut adjacent = vec![Vec::new(); f.count];
        for s in 0..self.semi_arcs.len() {
            adjacent[f.left[s]].push(f.right[s]);
            adjacent[f.right[s]].push(f.left[s]);
        }
        let mut colour: Vec<Option<bool>> = vec![None; f.count];
        for root in 0..f.count {
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let cx = colour[x].expect("coloured");
                for &y in &adjacent[x] {
                    match colour[y] {
                        None => {
                            colour[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return Ok(None),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Some(colour.into_iter().map(|c| c.expect("coloured")).collect()))
    }
}
