//! The birack chain complex, its degenerate and quandle variants, and integer
//! homology with class coordinates.

mod group;
mod matrix;

pub use group::{homology_group, AbelianGroup, ClassCoords, HomologyBasis, HomologyReport};
pub use matrix::{smith, smith_normal_form, IntMatrix, SmithForm};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::algebra::{BirackTable, Element};
use crate::error::{KnotError, Result};

/// Finitely supported integer combination of `degree`-tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Vec<Element>, i64>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    pub fn tuple(t: &[Element]) -> Self {
        Self::zero(t.len()).plus(t, 1)
    }

    /// Panics if some tuple has the wrong length.
    pub fn from_terms<'a>(degree: usize, terms: impl IntoIterator<Item = (&'a [Element], i64)>) -> Self {
        let mut c = Self::zero(degree);
        for (t, k) in terms {
            c.add_term(t, k);
        }
        c
    }

    pub fn plus(mut self, t: &[Element], k: i64) -> Self {
        self.add_term(t, k);
        self
    }

    pub fn add_term(&mut self, t: &[Element], k: i64) {
        assert_eq!(t.len(), self.degree, "tuple length must equal the chain degree");
        if k == 0 {
            return;
        }
        let e = self.terms.entry(t.to_vec()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(t);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, t: &[Element]) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Element], i64)> {
        self.terms.iter().map(|(t, &k)| (t.as_slice(), k))
    }

    pub fn scaled(&self, k: i64) -> Chain {
        let mut c = Chain::zero(self.degree);
        for (t, x) in self.terms() {
            c.add_term(t, x * k);
        }
        c
    }

    /// Drops tuples with two equal adjacent entries.
    pub fn without_degenerate(&self) -> Chain {
        Chain {
            degree: self.degree,
            terms: self.terms.iter().filter(|(t, _)| !is_degenerate(t)).map(|(t, &k)| (t.clone(), k)).collect(),
        }
    }

    /// Renders with element names, e.g. `(r,b,g) + (r,r,b) - 2(g,g,b)`.
    pub fn display_with(&self, name: impl Fn(Element) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (t, k)) in self.terms().enumerate() {
            let sign = if k < 0 { "-" } else { "+" };
            if i > 0 {
                out.push_str(&format!(" {sign} "));
            } else if k < 0 {
                out.push('-');
            }
            if k.abs() != 1 {
                out.push_str(&k.abs().to_string());
            }
            let inner: Vec<String> = t.iter().map(|&x| name(x)).collect();
            out.push_str(&format!("({})", inner.join(",")));
        }
        out
    }
}

impl Add for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        let mut c = self.clone();
        for (t, k) in rhs.terms() {
            c.add_term(t, k);
        }
        c
    }
}

impl Sub for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        self + &-rhs
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scaled(-1)
    }
}

impl Mul<&Chain> for i64 {
    type Output = Chain;
    fn mul(self, rhs: &Chain) -> Chain {
        rhs.scaled(self)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|x| x.to_string()))
    }
}

pub fn is_degenerate(t: &[Element]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

/// `∂(x₁,…,xₙ) = Σᵢ (−1)^{i+1} [(x₁,…,x̂ᵢ,…,xₙ) − (x₁^{xᵢ},…,x_{i−1}^{xᵢ}, x_{i+1 xᵢ},…,x_{n xᵢ})]`,
/// with `∂ = 0` in degree 1.
pub fn boundary(table: &BirackTable, c: &Chain) -> Result<Chain> {
    let n = c.degree;
    if n == 0 {
        return Err(KnotError::DegreeTooLow(0));
    }
    let mut out = Chain::zero(n - 1);
    if n == 1 {
        return Ok(out);
    }
    for (t, k) in c.terms() {
        for i in 0..n {
            let sign = if i % 2 == 0 { k } else { -k };
            let mut face: Vec<Element> = t.to_vec();
            face.remove(i);
            out.add_term(&face, sign);
            let xi = t[i];
            let mut acted = Vec::with_capacity(n - 1);
            for (j, &x) in t.iter().enumerate() {
                match j.cmp(&i) {
                    std::cmp::Ordering::Less => acted.push(table.up(x, xi)?),
                    std::cmp::Ordering::Greater => acted.push(table.down(x, xi)?),
                    std::cmp::Ordering::Equal => {}
                }
            }
            out.add_term(&acted, -sign);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Theory {
    /// All tuples, any total birack.
    BR,
    /// All tuples, down action trivial.
    R,
    /// Degenerate tuples, quandles only.
    D,
    /// Non-degenerate tuples modulo degenerate ones, quandles only.
    Q,
}

impl Theory {
    pub fn as_str(self) -> &'static str {
        match self {
            Theory::BR => "BR",
            Theory::R => "R",
            Theory::D => "D",
            Theory::Q => "Q",
        }
    }

    pub fn check(self, table: &BirackTable) -> Result<()> {
        let mismatch = |requirement| Err(KnotError::TheoryMismatch { theory: self.as_str(), requirement });
        if !table.is_total() {
            return mismatch("a total table");
        }
        match self {
            Theory::BR => Ok(()),
            Theory::R if !table.is_down_trivial() => mismatch("a trivial down action"),
            Theory::R => Ok(()),
            Theory::D | Theory::Q if !table.is_quandle() => mismatch("a quandle"),
            Theory::D | Theory::Q => Ok(()),
        }
    }

    /// Whether a tuple is a basis element in this theory.
    pub fn includes(self, t: &[Element]) -> bool {
        match self {
            Theory::BR | Theory::R => true,
            Theory::D => is_degenerate(t),
            Theory::Q => !is_degenerate(t),
        }
    }

    /// Basis tuples of degree `n` over `size` elements, in lexicographic order.
    pub fn basis(self, size: usize, n: usize) -> Vec<Vec<Element>> {
        let total = size.checked_pow(n as u32).expect("basis size overflows");
        (0..total)
            .map(|mut code| {
                let mut t = vec![0; n];
                for slot in t.iter_mut().rev() {
                    *slot = code % size;
                    code /= size;
                }
                t
            })
            .filter(|t| self.includes(t))
            .collect()
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theory {
    type Err = KnotError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "BR" => Ok(Theory::BR),
            "R" => Ok(Theory::R),
            "D" => Ok(Theory::D),
            "Q" => Ok(Theory::Q),
            _ => Err(KnotError::UnknownName(s.to_string())),
        }
    }
}

/// Matrix of `∂ₙ : Cₙ → Cₙ₋₁` in the theory's bases (columns index degree-n
/// tuples). For Q, boundary terms on degenerate tuples are dropped.
pub fn boundary_matrix(table: &BirackTable, n: usize, theory: Theory) -> Result<IntMatrix> {
    theory.check(table)?;
    if n == 0 {
        return Err(KnotError::DegreeTooLow(0));
    }
    let cols = theory.basis(table.size(), n);
    let rows = theory.basis(table.size(), n - 1);
    let row_index: BTreeMap<&[Element], usize> = rows.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, t) in cols.iter().enumerate() {
        let b = boundary(table, &Chain::tuple(t))?;
        for (face, k) in b.terms() {
            match row_index.get(face) {
                Some(&i) => m[(i, j)] = k.into(),
                None if theory == Theory::Q => {}
                None => unreachable!("degenerate chains have degenerate boundaries"),
            }
        }
    }
    Ok(m)
}
