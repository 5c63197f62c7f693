use std::collections::HashSet;

use serde::Serialize;

use super::{BirackTable, Element};

const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub passed: bool,
    /// Number of tuples on which every sub-expression was defined.
    pub checked: usize,
    pub counterexamples: Vec<Vec<Element>>,
}

impl Check {
    fn new() -> Self {
        Check { passed: true, checked: 0, counterexamples: Vec::new() }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<Element>) {
        self.checked += 1;
        if !ok {
            self.passed = false;
            if self.counterexamples.len() < MAX_WITNESSES {
                self.counterexamples.push(witness());
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureClass {
    Quandle,
    Rack,
    Biquandle,
    Birack,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub name: String,
    pub size: usize,
    pub total: bool,
    /// B1 as a whole: the sideways map is invertible and both diagonal identities hold.
    pub b1: Check,
    pub sideways_invertible: Check,
    /// `a_{a^{a^{-1}}} = a^{a^{-1}}`
    pub b1_diagonal_up: Check,
    /// `a^{a_{a^{-1}}} = a_{a^{-1}}`
    pub b1_diagonal_down: Check,
    /// The switch maps its domain injectively into itself.
    pub b2: Check,
    /// `S1 S2 S1 = S2 S1 S2` wherever both sides are defined.
    pub b3: Check,
    /// The three component identities of B3:
    /// `a^{c_b b^c} = a^{bc}`, `(a^b)_{c^{b_a}} = (a_c)^{b_{c^a}}`, `a_{c^b b_c} = a_{bc}`.
    pub derived: [Check; 3],
    pub class: StructureClass,
}

pub fn check_axioms(t: &BirackTable) -> AxiomReport {
    let n = t.size();

    let mut b2 = Check::new();
    let mut images = HashSet::new();
    for (a, b) in t.domain() {
        let (c, d) = t.switch(a, b).expect("domain pair");
        let fresh = images.insert((c, d));
        b2.record(fresh && t.in_domain(c, d), || vec![a, b]);
    }

    let mut b3 = Check::new();
    let mut derived = [Check::new(), Check::new(), Check::new()];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (Some(lhs), Some(rhs)) = (yb_left(t, [a, b, c]), yb_right(t, [a, b, c])) else {
                    continue;
                };
                b3.record(lhs == rhs, || vec![a, b, c]);
                // component i of the triple, restated with the usual variable names
                for (i, check) in derived.iter_mut().enumerate() {
                    check.record(lhs[i] == rhs[i], || vec![a, b, c]);
                }
            }
        }
    }

    let mut sideways_invertible = Check::new();
    let mut seen = HashSet::new();
    for (a, b) in t.domain() {
        let image = (b, t.down(a, b).expect("domain pair"));
        sideways_invertible.record(seen.insert(image), || vec![a, b]);
    }

    let mut b1_diagonal_up = Check::new();
    let mut b1_diagonal_down = Check::new();
    for a in 0..n {
        if let Ok(y) = t.up_inv(a, a) {
            if let Ok(ay) = t.down(a, y) {
                b1_diagonal_up.record(ay == y, || vec![a]);
            }
        }
        if let Ok(x) = t.down_inv(a, a) {
            if let Ok(ax) = t.up(a, x) {
                b1_diagonal_down.record(ax == x, || vec![a]);
            }
        }
    }
    let mut b1 = Check::new();
    b1.checked = sideways_invertible.checked + b1_diagonal_up.checked + b1_diagonal_down.checked;
    b1.passed = sideways_invertible.passed && b1_diagonal_up.passed && b1_diagonal_down.passed;
    for c in [&sideways_invertible, &b1_diagonal_up, &b1_diagonal_down] {
        b1.counterexamples.extend(c.counterexamples.iter().take(MAX_WITNESSES - b1.counterexamples.len()).cloned());
    }

    let birack = b2.passed && b3.passed;
    let biquandle = birack && b1.passed;
    let trivial = t.is_down_trivial() || t.is_up_trivial();
    let class = match (biquandle, birack, trivial) {
        (true, _, true) => StructureClass::Quandle,
        (true, _, false) => StructureClass::Biquandle,
        (false, true, true) => StructureClass::Rack,
        (false, true, false) => StructureClass::Birack,
        _ => StructureClass::None,
    };

    AxiomReport {
        name: t.name().to_string(),
        size: n,
        total: t.is_total(),
        b1,
        sideways_invertible,
        b1_diagonal_up,
        b1_diagonal_down,
        b2,
        b3,
        derived,
        class,
    }
}

fn s1(t: &BirackTable, [a, b, c]: [Element; 3]) -> Option<[Element; 3]> {
    let (x, y) = t.switch(a, b).ok()?;
    Some([x, y, c])
}

fn s2(t: &BirackTable, [a, b, c]: [Element; 3]) -> Option<[Element; 3]> {
    let (x, y) = t.switch(b, c).ok()?;
    Some([a, x, y])
}

fn yb_left(t: &BirackTable, v: [Element; 3]) -> Option<[Element; 3]> {
    s1(t, s2(t, s1(t, v)?)?)
}

fn yb_right(t: &BirackTable, v: [Element; 3]) -> Option<[Element; 3]> {
    s2(t, s1(t, s2(t, v)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Builtin;

    #[test]
    fn three_colour_is_quandle() {
        let r = check_axioms(&Builtin::ThreeColour.build().unwrap());
        assert_eq!(r.class, StructureClass::Quandle);
        assert!(r.b1.passed && r.b2.passed && r.b3.passed);
        assert_eq!(r.b3.checked, 27);
    }

    #[test]
    fn black_white_is_biquandle_not_rack() {
        let r = check_axioms(&Builtin::BlackWhite.build().unwrap());
        assert_eq!(r.class, StructureClass::Biquandle);
    }

    #[test]
    fn trivial_table_is_twist_quandle() {
        let t = BirackTable::new(
            "trivial",
            2,
            vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]],
            vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]],
        )
        .unwrap();
        assert_eq!(check_axioms(&t).class, StructureClass::Quandle);
    }

    #[test]
    fn alexander_family_are_biquandles() {
        for (m, l, u) in [(5, 2, 3), (7, 3, 2), (4, 3, 3), (5, 2, 1)] {
            let t = Builtin::Alexander { modulus: m, lambda: l, mu: u }.build().unwrap();
            let r = check_axioms(&t);
            assert!(r.b1.passed && r.b2.passed && r.b3.passed, "{m} {l} {u}: {r:?}");
        }
        // mu = 1 is the Burau quandle
        let t = Builtin::Alexander { modulus: 5, lambda: 2, mu: 1 }.build().unwrap();
        assert_eq!(check_axioms(&t).class, StructureClass::Quandle);
    }

    #[test]
    fn broken_yang_baxter_reported() {
        // actions are permutations, but 0 and 1 act differently in a way that breaks B3
        let t = BirackTable::new(
            "broken",
            3,
            vec![
                vec![Some(0), Some(1), Some(0)],
                vec![Some(1), Some(2), Some(1)],
                vec![Some(2), Some(0), Some(2)],
            ],
            vec![vec![Some(0); 3], vec![Some(1); 3], vec![Some(2); 3]],
        )
        .unwrap();
        let r = check_axioms(&t);
        assert!(!r.b3.passed);
        assert!(!r.b3.counterexamples.is_empty());
        assert!(r.derived.iter().any(|c| !c.passed));
        assert_eq!(r.class, StructureClass::None);
    }

    #[test]
    fn non_idempotent_rack() {
        // cyclic shift rack: a^b = a + 1 mod 3
        let t = BirackTable::from_fns("shift", 3, |a, _| (a + 1) % 3, |a, _| a).unwrap();
        let r = check_axioms(&t);
        assert!(r.b2.passed && r.b3.passed);
        assert!(!r.b1.passed);
        assert_eq!(r.class, StructureClass::Rack);
    }
}
