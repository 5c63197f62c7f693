use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::r3::r3_relations;
use crate::algebra::{BirackTable, Element};
use crate::colouring::Pattern;
use crate::error::Result;
use crate::homology::{smith, AbelianGroup, Chain, ClassCoords, IntMatrix};

/// The free abelian group on crossing triples modulo `abb`, `aaa`, `aab` and
/// the Reidemeister III relations, with an evaluator for triple sums.
#[derive(Debug, Clone)]
pub struct CrossingInvariantGroup {
    pub group: AbelianGroup,
    pub relation_count: usize,
    n: usize,
    u: IntMatrix,
    factors: Vec<BigInt>,
}

impl CrossingInvariantGroup {
    fn raw(&self, c: &Chain) -> Vec<BigInt> {
        assert_eq!(c.degree(), 3, "crossing sums have degree 3");
        let n = self.n;
        let mut x = vec![BigInt::zero(); n * n * n];
        for (t, k) in c.terms() {
            x[(t[0] * n + t[1]) * n + t[2]] += k;
        }
        self.u.mul_vec(&x)
    }

    pub fn evaluate(&self, c: &Chain) -> ClassCoords {
        let w = self.raw(c);
        let s = self.factors.len();
        ClassCoords {
            torsion: self.factors.iter().zip(&w).filter(|(d, _)| !d.is_one()).map(|(d, x)| x.mod_floor(d)).collect(),
            free: w[s..].to_vec(),
        }
    }

    /// Order of the image of `c`; `None` when it is infinite.
    pub fn order(&self, c: &Chain) -> Option<BigInt> {
        let coords = self.evaluate(c);
        if coords.free.iter().any(|x| !x.is_zero()) {
            return None;
        }
        let torsion = self.group.torsion.iter().zip(&coords.torsion);
        Some(torsion.fold(BigInt::one(), |acc, (d, x)| acc.lcm(&(d / d.gcd(x)))))
    }
}

pub fn crossing_invariant_group(table: &BirackTable) -> Result<CrossingInvariantGroup> {
    let n = table.size();
    let r3 = r3_relations(table)?;
    let mut relations: BTreeSet<Vec<(Vec<Element>, i64)>> = BTreeSet::new();
    let mut push = |c: &Chain| {
        if c.is_zero() {
            return;
        }
        let sign = if c.terms().next().expect("nonzero").1 < 0 { -1 } else { 1 };
        relations.insert(c.terms().map(|(t, k)| (t.to_vec(), k * sign)).collect());
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if matches!(Pattern::of(a, b, c), Pattern::Abb | Pattern::Aaa | Pattern::Aab) {
                    push(&Chain::tuple(&[a, b, c]));
                }
            }
        }
    }
    for rel in &r3.relations {
        push(rel);
    }

    let generators = n * n * n;
    let mut m = IntMatrix::zeros(generators, relations.len());
    for (j, rel) in relations.iter().enumerate() {
        for (t, k) in rel {
            m[((t[0] * n + t[1]) * n + t[2], j)] = (*k).into();
        }
    }
    let s = smith(&m, true, false);
    let factors = s.invariant_factors();
    Ok(CrossingInvariantGroup {
        group: AbelianGroup::from_factors(generators, &factors),
        relation_count: relations.len(),
        n,
        u: s.u.expect("tracked"),
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Builtin;

    #[test]
    fn order_three() {
        let q3 = Builtin::ThreeColour.build().unwrap();
        let g = crossing_invariant_group(&q3).unwrap();
        let x = Chain::tuple(&[0, 1, 2]).plus(&[0, 2, 0], 1);
        assert_eq!(g.order(&x), Some(BigInt::from(3)));
        assert!(g.evaluate(&Chain::tuple(&[1, 0, 0])).is_zero());
        assert!(g.evaluate(&Chain::tuple(&[2, 2, 2])).is_zero());
        assert!(g.evaluate(&Chain::tuple(&[1, 1, 0])).is_zero());
    }
}
