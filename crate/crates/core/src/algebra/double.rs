use super::{BirackTable, Element};
use crate::error::{KnotError, Result};

impl BirackTable {
    /// The double on `X × X`, with the pair `(p, q)` stored as `p * n + q`.
    ///
    /// For `x = (a, b)` and `y = (a^b, c)` the operations are
    /// `x^y = (a^{c_b}, b^c)` and `y_x = (a, c_b)`; every other pair is
    /// undefined, so exactly `n³` entries of each table are filled.
    pub fn double(&self) -> Result<BirackTable> {
        if !self.is_total() {
            return Err(KnotError::NotTotal);
        }
        let n = self.size();
        let m = n * n;
        let pair = |p: Element, q: Element| p * n + q;
        let mut up = vec![vec![None; m]; m];
        let mut down = vec![vec![None; m]; m];
        for a in 0..n {
            for b in 0..n {
                let x = pair(a, b);
                let a_up_b = self.up(a, b)?;
                for c in 0..n {
                    let y = pair(a_up_b, c);
                    let c_down_b = self.down(c, b)?;
                    up[x][y] = Some(pair(self.up(a, c_down_b)?, self.up(b, c)?));
                    down[y][x] = Some(pair(a, c_down_b));
                }
            }
        }
        BirackTable::new(format!("D({})", self.name()), m, up, down)
    }
}

#[cfg(test)]
mod tests {
    use crate::algebra::Builtin;

    #[test]
    fn doubled_q3_examples() {
        let d = Builtin::ThreeColour.build().unwrap().double().unwrap();
        let p = |a: usize, b: usize| a * 3 + b;
        // (r,g)^(b,r) = (r,b)
        assert_eq!(d.up(p(0, 1), p(2, 0)), Ok(p(0, 2)));
        let q = Builtin::ThreeColour.build().unwrap();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let y = p(q.up(a, b).unwrap(), c);
                    assert_eq!(d.down(y, p(a, b)), Ok(p(a, c)));
                }
            }
        }
        assert_eq!(d.domain_size(), 27);
        assert_eq!(d.size(), 9);
    }

    #[test]
    fn doubled_twist_is_trivial_on_second_coordinate() {
        let d = Builtin::Twist(3).build().unwrap().double().unwrap();
        for (y, x) in d.domain() {
            assert_eq!(d.up(x, y), Ok(x));
            assert_eq!(d.down(y, x), Ok(y));
        }
    }

    #[test]
    fn partial_input_rejected() {
        let d = Builtin::ThreeColour.build().unwrap().double().unwrap();
        assert_eq!(d.double(), Err(crate::error::KnotError::NotTotal));
    }
}
