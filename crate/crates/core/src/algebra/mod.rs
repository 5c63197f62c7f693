//! Finite biracks and biquandles given by up/down operation tables.
//!
//! Entry `up[a][b]` is `a^b` and `down[a][b]` is `a_b`. The switch map is
//! `S(a, b) = (b^a, a_b)`. A table may be partial: it is defined on a set
//! `Y` of pairs, and `(a, b) ∈ Y` exactly when both `b^a` and `a_b` are
//! defined. The two tables therefore share one domain, with the `up` table
//! indexed transposed relative to `down`.

mod axioms;
mod builtin;
mod double;
mod iso;

pub use axioms::{check_axioms, AxiomReport, Check, StructureClass};
pub use builtin::Builtin;
pub use iso::find_isomorphism;

use serde::{Deserialize, Serialize};

use crate::error::{KnotError, Result};

pub type Element = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Up,
    Down,
    UpInv,
    DownInv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirackTable {
    name: String,
    n: usize,
    up: Vec<Option<Element>>,
    down: Vec<Option<Element>>,
    // up_inv[c * n + b] = x with x^b = c
    up_inv: Vec<Option<Element>>,
    down_inv: Vec<Option<Element>>,
    // switch_inv[c * n + d] = (a, b) with S(a, b) = (c, d)
    switch_inv: Vec<Option<(Element, Element)>>,
}

impl BirackTable {
    /// Builds a table from row-major `up`/`down` entries (`None` = undefined).
    pub fn new(
        name: impl Into<String>,
        n: usize,
        up: Vec<Vec<Option<Element>>>,
        down: Vec<Vec<Option<Element>>>,
    ) -> Result<Self> {
        if up.len() != n || down.len() != n {
            return Err(KnotError::MalformedInput(format!(
                "expected {n} rows in both tables"
            )));
        }
        let mut up_flat = Vec::with_capacity(n * n);
        let mut down_flat = Vec::with_capacity(n * n);
        for (row_u, row_d) in up.iter().zip(&down) {
            if row_u.len() != n || row_d.len() != n {
                return Err(KnotError::MalformedInput(format!(
                    "expected rows of length {n}"
                )));
            }
            for &e in row_u.iter().chain(row_d) {
                if let Some(e) = e {
                    if e >= n {
                        return Err(KnotError::MalformedInput(format!(
                            "entry {e} out of range for carrier of size {n}"
                        )));
                    }
                }
            }
            up_flat.extend_from_slice(row_u);
            down_flat.extend_from_slice(row_d);
        }
        Self::from_flat(name.into(), n, up_flat, down_flat)
    }

    /// Builds a total table from closures.
    pub fn from_fns(
        name: impl Into<String>,
        n: usize,
        up: impl Fn(Element, Element) -> Element,
        down: impl Fn(Element, Element) -> Element,
    ) -> Result<Self> {
        let mut up_flat = Vec::with_capacity(n * n);
        let mut down_flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                up_flat.push(Some(up(a, b)));
                down_flat.push(Some(down(a, b)));
            }
        }
        Self::from_flat(name.into(), n, up_flat, down_flat)
    }

    fn from_flat(
        name: String,
        n: usize,
        up: Vec<Option<Element>>,
        down: Vec<Option<Element>>,
    ) -> Result<Self> {
        for a in 0..n {
            for b in 0..n {
                if up[b * n + a].is_some() != down[a * n + b].is_some() {
                    return Err(KnotError::MalformedInput(format!(
                        "definedness of {b}^{a} and {a}_{b} differs"
                    )));
                }
            }
        }
        let up_inv = invert_actions(n, &up, "up")?;
        let down_inv = invert_actions(n, &down, "down")?;

        let mut switch_inv = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                if let (Some(c), Some(d)) = (up[b * n + a], down[a * n + b]) {
                    // a non-injective switch keeps its first preimage; check_axioms reports it
                    switch_inv[c * n + d].get_or_insert((a, b));
                }
            }
        }
        Ok(Self { name, n, up, down, up_inv, down_inv, switch_inv })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    pub fn up_entry(&self, a: Element, b: Element) -> Option<Element> {
        self.up[a * self.n + b]
    }

    pub fn down_entry(&self, a: Element, b: Element) -> Option<Element> {
        self.down[a * self.n + b]
    }

    /// `a^b`
    pub fn up(&self, a: Element, b: Element) -> Result<Element> {
        self.check_range(a, b)?;
        self.up_entry(a, b).ok_or(KnotError::UndefinedPair(a, b))
    }

    /// `a_b`
    pub fn down(&self, a: Element, b: Element) -> Result<Element> {
        self.check_range(a, b)?;
        self.down_entry(a, b).ok_or(KnotError::UndefinedPair(a, b))
    }

    /// The `x` with `x^b = a`.
    pub fn up_inv(&self, a: Element, b: Element) -> Result<Element> {
        self.check_range(a, b)?;
        self.up_inv[a * self.n + b].ok_or(KnotError::NoPreimage(a, b))
    }

    /// The `x` with `x_b = a`.
    pub fn down_inv(&self, a: Element, b: Element) -> Result<Element> {
        self.check_range(a, b)?;
        self.down_inv[a * self.n + b].ok_or(KnotError::NoPreimage(a, b))
    }

    pub fn evaluate(&self, op: Op, a: Element, b: Element) -> Result<Element> {
        match op {
            Op::Up => self.up(a, b),
            Op::Down => self.down(a, b),
            Op::UpInv => self.up_inv(a, b),
            Op::DownInv => self.down_inv(a, b),
        }
    }

    /// Whether `(a, b)` lies in the switch domain `Y`.
    pub fn in_domain(&self, a: Element, b: Element) -> bool {
        a < self.n && b < self.n && self.down[a * self.n + b].is_some()
    }

    /// `S(a, b) = (b^a, a_b)`.
    pub fn switch(&self, a: Element, b: Element) -> Result<(Element, Element)> {
        self.check_range(a, b)?;
        match (self.up_entry(b, a), self.down_entry(a, b)) {
            (Some(c), Some(d)) => Ok((c, d)),
            _ => Err(KnotError::UndefinedPair(a, b)),
        }
    }

    /// The pair `(a, b)` with `S(a, b) = (c, d)`.
    pub fn switch_inverse(&self, c: Element, d: Element) -> Result<(Element, Element)> {
        self.check_range(c, d)?;
        self.switch_inv[c * self.n + d].ok_or(KnotError::UndefinedPair(c, d))
    }

    /// The sideways map `F(a, b^a) = (b, a_b)`.
    pub fn sideways(&self, a: Element, c: Element) -> Result<(Element, Element)> {
        let b = self.up_inv(c, a)?;
        Ok((b, self.down(a, b)?))
    }

    pub fn is_total(&self) -> bool {
        self.down.iter().all(Option::is_some)
    }

    pub fn domain_size(&self) -> usize {
        self.down.iter().filter(|e| e.is_some()).count()
    }

    pub fn domain(&self) -> impl Iterator<Item = (Element, Element)> + '_ {
        let n = self.n;
        (0..n * n)
            .filter(|&i| self.down[i].is_some())
            .map(move |i| (i / n, i % n))
    }

    pub fn is_down_trivial(&self) -> bool {
        self.down
            .iter()
            .enumerate()
            .all(|(i, e)| e.is_none_or(|e| e == i / self.n))
    }

    pub fn is_up_trivial(&self) -> bool {
        self.up
            .iter()
            .enumerate()
            .all(|(i, e)| e.is_none_or(|e| e == i / self.n))
    }

    /// Total, down-trivial, idempotent on the diagonal, with invertible actions.
    pub fn is_quandle(&self) -> bool {
        self.is_total()
            && self.is_down_trivial()
            && self.elements().all(|a| self.up_entry(a, a) == Some(a))
    }

    pub fn is_rack(&self) -> bool {
        self.is_total() && self.is_down_trivial()
    }

    pub fn is_involutory(&self) -> bool {
        self.is_total()
            && self
                .elements()
                .all(|a| self.elements().all(|b| self.up_entry(self.up_entry(a, b).unwrap(), b) == Some(a)))
    }

    fn check_range(&self, a: Element, b: Element) -> Result<()> {
        if a < self.n && b < self.n {
            Ok(())
        } else {
            Err(KnotError::UndefinedPair(a, b))
        }
    }

    pub fn to_file(&self) -> BirackFile {
        let row = |t: &[Option<Element>], a: usize| -> Vec<i64> {
            (0..self.n)
                .map(|b| t[a * self.n + b].map_or(-1, |e| e as i64))
                .collect()
        };
        BirackFile {
            name: self.name.clone(),
            n: self.n,
            up: (0..self.n).map(|a| row(&self.up, a)).collect(),
            down: (0..self.n).map(|a| row(&self.down, a)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("birack file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: BirackFile =
            serde_json::from_str(text).map_err(|e| KnotError::MalformedInput(e.to_string()))?;
        file.into_table()
    }
}

fn invert_actions(n: usize, table: &[Option<Element>], which: &str) -> Result<Vec<Option<Element>>> {
    let mut inv = vec![None; n * n];
    for x in 0..n {
        for b in 0..n {
            if let Some(c) = table[x * n + b] {
                if inv[c * n + b].replace(x).is_some() {
                    return Err(KnotError::MalformedInput(format!(
                        "{which} action of {b} is not injective"
                    )));
                }
            }
        }
    }
    Ok(inv)
}

/// On-disk birack format; `-1` marks an undefined entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BirackFile {
    pub name: String,
    pub n: usize,
    pub up: Vec<Vec<i64>>,
    pub down: Vec<Vec<i64>>,
}

impl BirackFile {
    pub fn into_table(self) -> Result<BirackTable> {
        let conv = |rows: Vec<Vec<i64>>| -> Result<Vec<Vec<Option<Element>>>> {
            rows.into_iter()
                .map(|row| {
                    row.into_iter()
                        .map(|e| match e {
                            -1 => Ok(None),
                            e if e >= 0 => Ok(Some(e as Element)),
                            e => Err(KnotError::MalformedInput(format!("bad entry {e}"))),
                        })
                        .collect()
                })
                .collect()
        };
        BirackTable::new(self.name, self.n, conv(self.up)?, conv(self.down)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> BirackTable {
        Builtin::ThreeColour.build().unwrap()
    }

    fn bq() -> BirackTable {
        Builtin::BlackWhite.build().unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let i3 = Builtin::Twist(3).build().unwrap();
        assert_eq!(i3.evaluate(Op::Up, 0, 2), Ok(0));
        assert_eq!(q3().evaluate(Op::Up, 0, 1), Ok(2));
        let q = q3();
        for a in q.elements() {
            assert_eq!(q.up(a, a), Ok(a));
        }
    }

    #[test]
    fn inverse_round_trip() {
        for t in [q3(), bq(), Builtin::Alexander { modulus: 5, lambda: 2, mu: 3 }.build().unwrap()] {
            for a in t.elements() {
                for b in t.elements() {
                    assert_eq!(t.up_inv(t.up(a, b).unwrap(), b), Ok(a));
                    assert_eq!(t.down_inv(t.down(a, b).unwrap(), b), Ok(a));
                    let (c, d) = t.switch(a, b).unwrap();
                    assert_eq!(t.switch_inverse(c, d), Ok((a, b)));
                }
            }
        }
    }

    #[test]
    fn switch_examples() {
        let i2 = Builtin::Twist(2).build().unwrap();
        assert_eq!(i2.switch(0, 1), Ok((1, 0)));
        assert_eq!(bq().switch(0, 0), Ok((1, 1)));
        assert_eq!(q3().switch(0, 0), Ok((0, 0)));
    }

    #[test]
    fn sideways_examples() {
        let i3 = Builtin::Twist(3).build().unwrap();
        assert_eq!(i3.sideways(1, 2), Ok((2, 1)));
        assert_eq!(bq().sideways(0, 0), Ok((1, 1)));
        let q = q3();
        for a in q.elements() {
            assert_eq!(q.sideways(a, a), Ok((a, a)));
        }
    }

    #[test]
    fn undefined_pair_errors() {
        let d = q3().double().unwrap();
        // x = (0,0), y = (1,1): y is not of the form (0^0, c) = (0, c)
        assert_eq!(d.up(0, 4), Err(KnotError::UndefinedPair(0, 4)));
        assert!(d.switch(4, 0).is_err());
        assert_eq!(q3().up(3, 0), Err(KnotError::UndefinedPair(3, 0)));
    }

    #[test]
    fn rejects_non_injective_action() {
        let r = BirackTable::new(
            "bad",
            2,
            vec![vec![Some(0), Some(0)], vec![Some(0), Some(1)]],
            vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]],
        );
        assert!(matches!(r, Err(KnotError::MalformedInput(_))));
    }

    #[test]
    fn rejects_uncoupled_domain() {
        let r = BirackTable::new(
            "bad",
            2,
            vec![vec![Some(0), None], vec![Some(1), Some(1)]],
            vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]],
        );
        assert!(matches!(r, Err(KnotError::MalformedInput(_))));
    }

    #[test]
    fn json_is_byte_stable() {
        for t in [q3(), bq(), q3().double().unwrap()] {
            let text = t.to_json();
            let back = BirackTable::from_json(&text).unwrap();
            assert_eq!(back, t);
            assert_eq!(back.to_json(), text);
        }
        assert_eq!(
            bq().to_json(),
            r#"{"name":"BQ21","n":2,"up":[[1,1],[0,0]],"down":[[1,1],[0,0]]}"#
        );
    }

    #[test]
    fn json_rejects_garbage() {
        assert!(BirackTable::from_json("{}").is_err());
        assert!(BirackTable::from_json(r#"{"name":"x","n":1,"up":[[-2]],"down":[[0]]}"#).is_err());
        assert!(BirackTable::from_json(r#"{"name":"x","n":1,"up":[[0]],"down":[[0]],"extra":1}"#).is_err());
    }
}
