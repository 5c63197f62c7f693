use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use knotkit::algebra::{check_axioms, BirackTable, Builtin};
use knotkit::colouring::{count_colourings, enumerate_edge_colourings, enumerate_whole_colourings};
use knotkit::diagram::{catalog, catalog_names, equivalence_pairs, Diagram};
use knotkit::homology::{
    boundary, homology_group, is_degenerate, smith_normal_form, Chain, ClassCoords, IntMatrix, Theory,
};
use knotkit::invariants::whole_cycle;

fn builtins() -> Vec<BirackTable> {
    [
        Builtin::ThreeColour,
        Builtin::BlackWhite,
        Builtin::Twist(2),
        Builtin::Twist(3),
        Builtin::Dihedral(3),
        Builtin::Dihedral(4),
        Builtin::Dihedral(5),
        Builtin::Alexander { modulus: 5, lambda: 2, mu: 3 },
        Builtin::Alexander { modulus: 4, lambda: 3, mu: 1 },
    ]
    .into_iter()
    .map(|b| b.build().unwrap())
    .collect()
}

fn all_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    (0..n.pow(len as u32))
        .map(|mut k| {
            let mut t = vec![0; len];
            for x in t.iter_mut().rev() {
                *x = k % n;
                k /= n;
            }
            t
        })
        .collect()
}

/// Fraction-free Gaussian elimination, kept apart from the Smith form code.
fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

#[test]
fn boundary_squares_to_zero_on_builtins() {
    for t in builtins() {
        for n in 2..=4 {
            for tuple in all_tuples(t.size(), n) {
                let c = Chain::tuple(&tuple);
                let dd = boundary(&t, &boundary(&t, &c).unwrap()).unwrap();
                assert!(dd.is_zero(), "{} {:?}", t.name(), tuple);
            }
        }
    }
}

#[test]
fn degenerate_chains_form_a_subcomplex() {
    for t in builtins().into_iter().filter(BirackTable::is_quandle) {
        for n in 2..=4 {
            for tuple in all_tuples(t.size(), n).into_iter().filter(|x| is_degenerate(x)) {
                let d = boundary(&t, &Chain::tuple(&tuple)).unwrap();
                assert!(d.terms().all(|(x, _)| is_degenerate(x)), "{} {:?} -> {}", t.name(), tuple, d);
            }
        }
    }
}

#[test]
fn file_round_trips() {
    for t in builtins() {
        assert_eq!(BirackTable::from_json(&t.to_json()).unwrap(), t);
        let d = t.double().unwrap();
        assert_eq!(BirackTable::from_json(&d.to_json()).unwrap(), d);
    }
    for b in [Builtin::ThreeColour, Builtin::Twist(4), Builtin::Alexander { modulus: 7, lambda: 3, mu: 2 }] {
        assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
    }
    for name in catalog_names() {
        let d = catalog(name).unwrap();
        let again = Diagram::from_json(&d.to_json()).unwrap();
        assert_eq!(again.to_json(), d.to_json());
        assert_eq!(again.gauss_code(), d.gauss_code());
        let back = d.mirror().mirror();
        assert_eq!(back.to_json(), d.to_json());
        assert_eq!(d.mirror().writhe(), -d.writhe());
    }
}

#[test]
fn malformed_files_are_rejected() {
    assert!(BirackTable::from_json("{\"name\":\"x\",\"n\":2,\"up\":[[0,0],[1,1]]}").is_err());
    assert!(BirackTable::from_json("{\"name\":\"x\",\"n\":2,\"up\":[[0,0],[0,0]],\"down\":[[0,1],[0,1]]}").is_err());
    assert!(Diagram::from_json("{\"name\":\"x\"}").is_err());
    let mut text = catalog("trefoil_r").unwrap().to_json();
    text = text.replacen("\"edges\":[[", "\"edges\":[[99,", 1);
    assert!(Diagram::from_json(&text).is_err());
}

#[test]
fn doubles_of_builtins_satisfy_the_axioms() {
    for t in builtins() {
        let r = check_axioms(&t.double().unwrap());
        assert!(r.b2.passed && r.b3.passed, "{}", t.name());
        if t.is_quandle() {
            assert!(r.b1.passed, "{}", t.name());
        }
    }
}

#[test]
fn counts_agree_on_equivalent_diagrams() {
    for t in builtins() {
        for (a, b) in equivalence_pairs() {
            let (a, b) = (catalog(a).unwrap(), catalog(b).unwrap());
            assert_eq!(count_colourings(&a, &t), count_colourings(&b, &t), "{} {} {}", t.name(), a.name(), b.name());
        }
    }
}

#[test]
fn whole_colourings_match_the_double() {
    for t in builtins().into_iter().filter(|t| t.size() <= 4) {
        let double = t.double().unwrap();
        for name in catalog_names() {
            let d = catalog(name).unwrap();
            assert_eq!(
                enumerate_whole_colourings(&d, &t).unwrap().len(),
                count_colourings(&d, &double),
                "{} {}",
                t.name(),
                name
            );
        }
    }
}

fn add_classes(a: &ClassCoords, b: &ClassCoords, torsion: &[BigInt]) -> ClassCoords {
    ClassCoords {
        torsion: a.torsion.iter().zip(&b.torsion).zip(torsion).map(|((x, y), d)| ((x + y) % d + d) % d).collect(),
        free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
    }
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_form_identities(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        let (u, v, v_inv) = (s.u.unwrap(), s.v.unwrap(), s.v_inv.unwrap());
        prop_assert_eq!(&(&u * &m) * &v, s.d.clone());
        prop_assert!(s.d.is_diagonal());
        prop_assert!(determinant(&u).abs().is_one());
        prop_assert!(determinant(&v).abs().is_one());
        prop_assert_eq!(&v * &v_inv, IntMatrix::identity(v.rows()));
        let diag = s.d.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        prop_assert_eq!(diag.iter().filter(|x| !x.is_zero()).count(), s.rank);
        for w in diag[..s.rank].windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        // the product of invariant factors of a square matrix is |det|
        if m.rows() == m.cols() {
            let prod = diag.iter().fold(BigInt::one(), |acc, x| acc * x);
            prop_assert_eq!(prod, determinant(&m).abs());
        }
    }

    #[test]
    fn boundaries_have_trivial_class(coeffs in prop::collection::vec(-3i64..=3, 81)) {
        let q3 = Builtin::ThreeColour.build().unwrap();
        let basis = homology_group(&q3, 3, Theory::Q).unwrap();
        let mut c = Chain::zero(4);
        for (tuple, k) in all_tuples(3, 4).iter().zip(&coeffs) {
            c.add_term(tuple, *k);
        }
        let d = boundary(&q3, &c).unwrap().without_degenerate();
        prop_assert!(basis.cycle_class(&d).unwrap().is_zero());
    }

    #[test]
    fn classes_are_additive(i in 0usize..27, j in 0usize..27, k in -4i64..=4) {
        let q3 = Builtin::ThreeColour.build().unwrap();
        let basis = homology_group(&q3, 3, Theory::Q).unwrap();
        let d = catalog("trefoil_r").unwrap();
        let cycles: Vec<Chain> = enumerate_whole_colourings(&d, &q3).unwrap().iter().map(|w| whole_cycle(&d, w).unwrap()).collect();
        let (a, b) = (&cycles[i], &cycles[j]);
        let sum = a + &(k * b);
        let class_b = basis.cycle_class(b).unwrap();
        let mut scaled = basis.cycle_class(&Chain::zero(3)).unwrap();
        for _ in 0..k.unsigned_abs() {
            let step = if k > 0 { class_b.clone() } else { basis.cycle_class(&-b).unwrap() };
            scaled = add_classes(&scaled, &step, &basis.group.torsion);
        }
        let expect = add_classes(&basis.cycle_class(a).unwrap(), &scaled, &basis.group.torsion);
        prop_assert_eq!(basis.cycle_class(&sum).unwrap(), expect);
    }

    #[test]
    fn alexander_counts_are_invariant(m in 2usize..=7, l in 1i64..7, u in 1i64..7) {
        let Ok(t) = (Builtin::Alexander { modulus: m, lambda: l, mu: u }).build() else {
            return Ok(());
        };
        for (a, b) in equivalence_pairs() {
            prop_assert_eq!(count_colourings(&catalog(a).unwrap(), &t), count_colourings(&catalog(b).unwrap(), &t));
        }
        // the constant colourings are always there
        let free = enumerate_edge_colourings(&catalog("trefoil_r").unwrap(), &t);
        prop_assert!(!free.is_empty());
    }
}
