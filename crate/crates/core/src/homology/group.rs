use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::{boundary_matrix, smith, Chain, IntMatrix, Theory};
use crate::algebra::{find_isomorphism, BirackTable, Builtin, Element};
use crate::error::{KnotError, Result};

/// `Z^free_rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_k` with `d₁ | … | d_k`, each `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "as_integers")]
    pub torsion: Vec<BigInt>,
}

/// Serializes as JSON numbers where they fit in `i64`, decimal strings otherwise.
pub(crate) fn as_integers<S: serde::Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        match x.to_i64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Builds the group from Smith invariant factors of a relation matrix on
    /// `generators` generators.
    pub fn from_factors(generators: usize, factors: &[BigInt]) -> Self {
        AbelianGroup {
            free_rank: generators - factors.len(),
            torsion: factors.iter().filter(|d| !d.is_one()).cloned().collect(),
        }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Coordinates of a homology class: one residue per torsion summand, then
/// one integer per free summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassCoords {
    #[serde(serialize_with = "as_integers")]
    pub torsion: Vec<BigInt>,
    #[serde(serialize_with = "as_integers")]
    pub free: Vec<BigInt>,
}

impl ClassCoords {
    pub fn is_zero(&self) -> bool {
        self.torsion.iter().chain(&self.free).all(Zero::is_zero)
    }
}

/// `Hₙ` together with what is needed to read off class coordinates of cycles.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    pub birack: String,
    pub degree: usize,
    pub theory: Theory,
    pub group: AbelianGroup,
    index: BTreeMap<Vec<Element>, usize>,
    boundary: IntMatrix,
    // rank of ∂ₙ and the inverse right transform of its Smith form
    rank: usize,
    v_inv: IntMatrix,
    // left transform of the Smith form of im ∂ₙ₊₁ in kernel coordinates
    u_image: IntMatrix,
    factors: Vec<BigInt>,
    // automorphism applied to the torsion coordinate of a cyclic group
    scale: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub birack: String,
    pub degree: usize,
    pub theory: Theory,
    pub free_rank: usize,
    #[serde(serialize_with = "as_integers")]
    pub torsion: Vec<BigInt>,
}

impl HomologyBasis {
    pub fn report(&self) -> HomologyReport {
        HomologyReport {
            birack: self.birack.clone(),
            degree: self.degree,
            theory: self.theory,
            free_rank: self.group.free_rank,
            torsion: self.group.torsion.clone(),
        }
    }

    fn vector(&self, c: &Chain) -> Result<Vec<BigInt>> {
        if c.degree() != self.degree {
            return Err(KnotError::MalformedInput(format!(
                "chain of degree {} in degree-{} homology",
                c.degree(),
                self.degree
            )));
        }
        let mut z = vec![BigInt::zero(); self.index.len()];
        for (t, k) in c.terms() {
            match self.index.get(t) {
                Some(&i) => z[i] += k,
                // degenerate tuples vanish in the quotient
                None if self.theory == Theory::Q => {}
                None => {
                    return Err(KnotError::TheoryMismatch {
                        theory: self.theory.as_str(),
                        requirement: "chains supported on degenerate tuples",
                    })
                }
            }
        }
        Ok(z)
    }

    fn raw_coords(&self, c: &Chain) -> Result<Vec<BigInt>> {
        let z = self.vector(c)?;
        if !self.boundary.mul_vec(&z).iter().all(Zero::is_zero) {
            return Err(KnotError::NotACycle);
        }
        let y = self.v_inv.mul_vec(&z);
        debug_assert!(y[..self.rank].iter().all(Zero::is_zero));
        Ok(self.u_image.mul_vec(&y[self.rank..]))
    }

    /// Coordinates of the class of a cycle.
    pub fn cycle_class(&self, c: &Chain) -> Result<ClassCoords> {
        let w = self.raw_coords(c)?;
        let s = self.factors.len();
        let torsion = self.factors
            .iter()
            .zip(&w)
            .filter(|(d, _)| !d.is_one())
            .map(|(d, x)| (x * &self.scale).mod_floor(d))
            .collect();
        Ok(ClassCoords { torsion, free: w[s..].to_vec() })
    }

    /// For a cyclic torsion group, the class as a representative in `(-d/2, d/2]`.
    pub fn cyclic_value(&self, c: &Chain) -> Result<Option<i64>> {
        if self.group.free_rank != 0 || self.group.torsion.len() != 1 {
            return Ok(None);
        }
        let d = self.group.torsion[0].clone();
        let x = self.cycle_class(c)?.torsion[0].clone();
        let half = &d / 2;
        let rep = if x > half { x - &d } else { x };
        Ok(rep.to_i64())
    }

    /// Rescales the coordinate of a cyclic group so that `c` has class 1.
    /// Fails unless the group is cyclic torsion and `c` generates it.
    pub fn normalize_generator(&mut self, c: &Chain) -> Result<()> {
        if self.group.free_rank != 0 || self.group.torsion.len() != 1 {
            return Err(KnotError::BadParameter(format!("{} is not a finite cyclic group", self.group)));
        }
        self.scale = BigInt::one();
        let d = self.group.torsion[0].clone();
        let x = self.cycle_class(c)?.torsion[0].clone();
        let g = x.extended_gcd(&d);
        if !g.gcd.is_one() {
            return Err(KnotError::BadParameter("chain does not generate the group".into()));
        }
        self.scale = g.x.mod_floor(&d);
        Ok(())
    }
}

/// `Hₙ = ker ∂ₙ / im ∂ₙ₊₁` via two Smith forms. For the three-colour quandle in
/// degree 3 (theory Q) the generator is normalised so that
/// `(0,1,2) + (0,2,0)` has class 1.
pub fn homology_group(table: &BirackTable, n: usize, theory: Theory) -> Result<HomologyBasis> {
    let dn = boundary_matrix(table, n, theory)?;
    let dn1 = boundary_matrix(table, n + 1, theory)?;
    let cols = dn.cols();

    let first = smith(&dn, false, true);
    let rank = first.rank;
    let v_inv = first.v_inv.expect("tracked");
    let image = (&v_inv * &dn1).rows_from(rank);
    let second = smith(&image, true, false);
    let factors = second.invariant_factors();
    let group = AbelianGroup::from_factors(cols - rank, &factors);

    let index = theory.basis(table.size(), n).into_iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut basis = HomologyBasis {
        birack: table.name().to_string(),
        degree: n,
        theory,
        group,
        index,
        boundary: dn,
        rank,
        v_inv,
        u_image: second.u.expect("tracked"),
        factors,
        scale: BigInt::one(),
    };
    if n == 3 && theory == Theory::Q && table.size() == 3 && find_isomorphism(table, &Builtin::Dihedral(3).build()?).is_some() {
        basis.normalize_generator(&three_colour_generator())?;
    }
    Ok(basis)
}

/// `(r,g,b) + (r,b,r)` with `r, g, b = 0, 1, 2`.
pub fn three_colour_generator() -> Chain {
    Chain::tuple(&[0, 1, 2]).plus(&[0, 2, 0], 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::boundary;

    #[test]
    fn black_white_groups() {
        let bw = Builtin::BlackWhite.build().unwrap();
        assert_eq!(homology_group(&bw, 1, Theory::BR).unwrap().group.to_string(), "Z + Z_2");
        assert_eq!(homology_group(&bw, 2, Theory::BR).unwrap().group.to_string(), "Z^2");
    }

    #[test]
    fn three_colour_groups() {
        let q3 = Builtin::ThreeColour.build().unwrap();
        assert!(homology_group(&q3, 2, Theory::Q).unwrap().group.is_trivial());
        let h3 = homology_group(&q3, 3, Theory::Q).unwrap();
        assert_eq!(h3.group.to_string(), "Z_3");
        let g = three_colour_generator();
        assert_eq!(h3.cyclic_value(&g), Ok(Some(1)));
        assert_eq!(h3.cyclic_value(&(2 * &g)), Ok(Some(-1)));
        let b = boundary(&q3, &Chain::tuple(&[0, 1, 2, 1])).unwrap();
        assert_eq!(h3.cyclic_value(&b), Ok(Some(0)));
        assert_eq!(h3.cycle_class(&Chain::tuple(&[0, 1, 2])), Err(KnotError::NotACycle));
    }

    #[test]
    fn display_forms() {
        let g = AbelianGroup { free_rank: 0, torsion: vec![] };
        assert_eq!(g.to_string(), "0");
        let g = AbelianGroup { free_rank: 4, torsion: vec![BigInt::from(3)] };
        assert_eq!(g.to_string(), "Z^4 + Z_3");
    }
}
