use super::PdCrossing::{V, X};
use super::{Diagram, DiagramFile};
use crate::error::{KnotError, Result};

const NAMES: [&str; 9] = [
    "unknot0",
    "unknot_kink_pos",
    "unknot_r2",
    "trefoil_r",
    "trefoil_l",
    "trefoil_r_kinked",
    "figure8",
    "virtual_trefoil",
    "virtual_trefoil_l",
];

pub fn catalog_names() -> &'static [&'static str] {
    &NAMES
}

/// Pairs of catalog diagrams related by Reidemeister moves.
pub fn equivalence_pairs() -> &'static [(&'static str, &'static str)] {
    &[("trefoil_r", "trefoil_r_kinked"), ("unknot0", "unknot_r2"), ("unknot0", "unknot_kink_pos")]
}

fn trefoil_r() -> Diagram {
    Diagram::from_pd("trefoil_r", &[X([1, 5, 2, 4]), X([3, 1, 4, 6]), X([5, 3, 6, 2])], Some(0))
        .expect("trefoil_r")
}

fn virtual_trefoil() -> Diagram {
    Diagram::from_pd("virtual_trefoil", &[X([1, 5, 2, 4]), V([3, 1, 4, 6]), X([5, 3, 6, 2])], Some(0))
        .expect("virtual_trefoil")
}

pub fn catalog(name: &str) -> Result<Diagram> {
    Ok(match name {
        "unknot0" => Diagram::from_file(DiagramFile {
            name: name.into(),
            vertices: Vec::new(),
            edges: Vec::new(),
            outer_face_dart: None,
            free_loops: 1,
        })?,
        "unknot_kink_pos" => Diagram::from_pd(name, &[X([1, 1, 2, 2])], Some(0))?,
        "unknot_r2" => Diagram::from_pd(name, &[X([1, 2, 2, 3]), X([4, 4, 1, 3])], Some(0))?,
        "trefoil_r" => trefoil_r(),
        "trefoil_l" => trefoil_r().mirror().with_name(name),
        "trefoil_r_kinked" => {
            Diagram::from_pd(name, &[X([1, 5, 2, 4]), X([3, 1, 4, 8]), X([5, 3, 6, 2]), X([7, 7, 8, 6])], Some(0))?
        }
        "figure8" => {
            Diagram::from_pd(name, &[X([4, 2, 5, 1]), X([8, 6, 1, 5]), X([6, 3, 7, 4]), X([2, 7, 3, 8])], Some(0))?
        }
        "virtual_trefoil" => virtual_trefoil(),
        "virtual_trefoil_l" => virtual_trefoil().mirror().with_name(name),
        _ => return Err(KnotError::UnknownName(name.to_string())),
    })
}
