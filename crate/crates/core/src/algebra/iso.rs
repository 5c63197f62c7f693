use super::{BirackTable, Element};

/// Searches for a bijection `f` with `f(a^b) = f(a)^{f(b)}` and `f(a_b) = f(a)_{f(b)}`
/// (undefined entries must map to undefined entries). Returns `f` as an image array.
pub fn find_isomorphism(s: &BirackTable, t: &BirackTable) -> Option<Vec<Element>> {
    if s.size() != t.size() || s.domain_size() != t.domain_size() {
        return None;
    }
    let n = s.size();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(s, t, 0, &mut image, &mut used).then_some(image)
}

fn search(s: &BirackTable, t: &BirackTable, k: usize, image: &mut [Element], used: &mut [bool]) -> bool {
    let n = s.size();
    if k == n {
        return true;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        image[k] = v;
        used[v] = true;
        if consistent(s, t, k, image) && search(s, t, k + 1, image, used) {
            return true;
        }
        used[v] = false;
    }
    image[k] = usize::MAX;
    false
}

// checks every entry whose arguments are among 0..=k
fn consistent(s: &BirackTable, t: &BirackTable, k: usize, image: &[Element]) -> bool {
    let agrees = |src: Option<Element>, dst: Option<Element>| match (src, dst) {
        (None, None) => true,
        (Some(x), Some(y)) => image[x] == usize::MAX || image[x] == y,
        _ => false,
    };
    (0..=k).all(|j| {
        [(k, j), (j, k)].into_iter().all(|(a, b)| {
            agrees(s.up_entry(a, b), t.up_entry(image[a], image[b]))
                && agrees(s.down_entry(a, b), t.down_entry(image[a], image[b]))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Builtin;

    #[test]
    fn three_colour_matches_dihedral_three() {
        let q = Builtin::ThreeColour.build().unwrap();
        let r = Builtin::Dihedral(3).build().unwrap();
        let f = find_isomorphism(&q, &r).expect("isomorphic");
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(r.up(f[a], f[b]).unwrap(), f[q.up(a, b).unwrap()]);
            }
        }
    }

    #[test]
    fn non_isomorphic_tables() {
        let r3 = Builtin::Dihedral(3).build().unwrap();
        let i3 = Builtin::Twist(3).build().unwrap();
        assert!(find_isomorphism(&r3, &i3).is_none());
        let r4 = Builtin::Dihedral(4).build().unwrap();
        assert!(find_isomorphism(&r3, &r4).is_none());
    }

    #[test]
    fn finds_nontrivial_relabelling() {
        let r5 = Builtin::Dihedral(5).build().unwrap();
        // multiplication by 2 is an automorphism of R5; relabel through it
        let relabel = |a: usize| (2 * a) % 5;
        let inv = |a: usize| (3 * a) % 5;
        let t = BirackTable::from_fns("R5'", 5, |a, b| relabel(r5.up(inv(a), inv(b)).unwrap()), |a, _| a).unwrap();
        assert!(find_isomorphism(&r5, &t).is_some());
    }
}
