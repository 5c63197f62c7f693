use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::{BirackTable, Element};
use crate::error::{KnotError, Result};

/// Named constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// `I_n`: both actions trivial, `S(a, b) = (b, a)`.
    Twist(usize),
    /// `a^b = 2b - a mod m`.
    Dihedral(usize),
    /// Transpositions of `S_3` under conjugation, `r = (12)`, `g = (13)`, `b = (23)`.
    ThreeColour,
    /// `{b, w}`, every action swaps the two colours.
    BlackWhite,
    /// `a^b = λa + (1 - λμ)b`, `a_b = μa` over `Z/m`.
    Alexander { modulus: usize, lambda: i64, mu: i64 },
}

impl Builtin {
    pub const NAMES: [&'static str; 5] = ["twist", "dihedral", "three_colour", "black_white", "alexander"];

    pub fn build(self) -> Result<BirackTable> {
        match self {
            Builtin::Twist(n) => {
                if n == 0 {
                    return Err(KnotError::BadParameter("twist needs n >= 1".into()));
                }
                BirackTable::from_fns(format!("I{n}"), n, |a, _| a, |a, _| a)
            }
            Builtin::Dihedral(m) => {
                if m < 2 {
                    return Err(KnotError::BadParameter("dihedral needs m >= 2".into()));
                }
                BirackTable::from_fns(format!("R{m}"), m, |a, b| (2 * b + m - a) % m, |a, _| a)
            }
            Builtin::ThreeColour => three_colour(),
            Builtin::BlackWhite => BirackTable::from_fns("BQ21", 2, |a, _| 1 - a, |a, _| 1 - a),
            Builtin::Alexander { modulus, lambda, mu } => alexander(modulus, lambda, mu),
        }
    }
}

fn three_colour() -> Result<BirackTable> {
    // permutations of {0,1,2} as image arrays
    const TRANSPOSITIONS: [[usize; 3]; 3] = [[1, 0, 2], [2, 1, 0], [0, 2, 1]];
    let compose = |p: [usize; 3], q: [usize; 3]| -> [usize; 3] { [p[q[0]], p[q[1]], p[q[2]]] };
    let index = |p: [usize; 3]| TRANSPOSITIONS.iter().position(|&t| t == p).expect("closed under conjugation");
    BirackTable::from_fns(
        "Q33",
        3,
        |a, b| {
            let (ta, tb) = (TRANSPOSITIONS[a], TRANSPOSITIONS[b]);
            index(compose(tb, compose(ta, tb)))
        },
        |a, _| a,
    )
}

fn alexander(m: usize, lambda: i64, mu: i64) -> Result<BirackTable> {
    if m < 2 {
        return Err(KnotError::BadParameter("alexander needs m >= 2".into()));
    }
    let mi = m as i64;
    let (l, u) = (lambda.mod_floor(&mi), mu.mod_floor(&mi));
    for (name, v) in [("lambda", l), ("mu", u)] {
        if v.gcd(&mi) != 1 {
            return Err(KnotError::BadParameter(format!("{name} = {v} is not a unit mod {m}")));
        }
    }
    let c = (1 - l * u).mod_floor(&mi);
    BirackTable::from_fns(
        format!("A{m}({l},{u})"),
        m,
        |a, b| ((l * a as i64 + c * b as i64) % mi) as Element,
        |a, _| ((u * a as i64) % mi) as Element,
    )
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Twist(n) => write!(f, "twist:{n}"),
            Builtin::Dihedral(m) => write!(f, "dihedral:{m}"),
            Builtin::ThreeColour => write!(f, "three_colour"),
            Builtin::BlackWhite => write!(f, "black_white"),
            Builtin::Alexander { modulus, lambda, mu } => write!(f, "alexander:{modulus}:{lambda}:{mu}"),
        }
    }
}

/// Accepts `q3`, `three_colour`, `bq21`, `black_white`, `i<n>`, `twist:<n>`,
/// `r<m>`, `dihedral:<m>` and `alexander:<m>:<λ>:<μ>`.
impl FromStr for Builtin {
    type Err = KnotError;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || KnotError::UnknownName(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| unknown());
        let lower = s.to_ascii_lowercase();
        let parts: Vec<&str> = lower.split(':').collect();
        Ok(match parts.as_slice() {
            ["q3" | "q33" | "three_colour" | "three-colour"] => Builtin::ThreeColour,
            ["bq21" | "bq" | "black_white" | "black-white"] => Builtin::BlackWhite,
            ["twist", n] => Builtin::Twist(num(n)?),
            ["dihedral", m] => Builtin::Dihedral(num(m)?),
            ["alexander", m, l, u] => Builtin::Alexander {
                modulus: num(m)?,
                lambda: l.parse().map_err(|_| unknown())?,
                mu: u.parse().map_err(|_| unknown())?,
            },
            [short] if short.starts_with('i') && short.len() > 1 => Builtin::Twist(num(&short[1..])?),
            [short] if short.starts_with('r') && short.len() > 1 => Builtin::Dihedral(num(&short[1..])?),
            _ => return Err(unknown()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn black_white_table() {
        let t = Builtin::BlackWhite.build().unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(t.up(a, b), Ok(1 - a));
                assert_eq!(t.down(a, b), Ok(1 - a));
            }
        }
    }

    #[test]
    fn alexander_trivial_is_twist() {
        let a = Builtin::Alexander { modulus: 3, lambda: 1, mu: 1 }.build().unwrap();
        let i3 = Builtin::Twist(3).build().unwrap();
        assert_eq!(a.to_file().up, i3.to_file().up);
        assert_eq!(a.to_file().down, i3.to_file().down);
    }

    #[test]
    fn alexander_rejects_non_units() {
        let r = Builtin::Alexander { modulus: 4, lambda: 2, mu: 1 }.build();
        assert!(matches!(r, Err(KnotError::BadParameter(_))));
        let r = Builtin::Alexander { modulus: 6, lambda: 1, mu: 3 }.build();
        assert!(matches!(r, Err(KnotError::BadParameter(_))));
    }

    #[test]
    fn dihedral_entry() {
        assert_eq!(Builtin::Dihedral(3).build().unwrap().up(0, 1), Ok(2));
        assert!(Builtin::Dihedral(1).build().is_err());
    }

    #[test]
    fn three_colour_conjugation() {
        let q = Builtin::ThreeColour.build().unwrap();
        // (13)(12)(13) = (23)
        assert_eq!(q.up(0, 1), Ok(2));
        assert_eq!(q.up(1, 0), Ok(2));
        assert_eq!(q.up(2, 2), Ok(2));
    }

    #[test]
    fn parse_names() {
        assert_eq!("q3".parse::<Builtin>(), Ok(Builtin::ThreeColour));
        assert_eq!("BQ21".parse::<Builtin>(), Ok(Builtin::BlackWhite));
        assert_eq!("i3".parse::<Builtin>(), Ok(Builtin::Twist(3)));
        assert_eq!("r5".parse::<Builtin>(), Ok(Builtin::Dihedral(5)));
        assert_eq!(
            "alexander:5:2:-1".parse::<Builtin>(),
            Ok(Builtin::Alexander { modulus: 5, lambda: 2, mu: -1 })
        );
        assert!("nope".parse::<Builtin>().is_err());
        for b in [Builtin::Twist(2), Builtin::Dihedral(7), Builtin::Alexander { modulus: 5, lambda: 2, mu: 3 }] {
            assert_eq!(b.to_string().parse::<Builtin>(), Ok(b));
        }
    }
}
