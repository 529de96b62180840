//! Built-in small monoids: every monoid of order at most 3 up to isomorphism,
//! the cyclic groups up to order 6 and the Klein four-group.

use crate::monoid::{validate_monoid, FiniteMonoid};

fn order3(rows: [[usize; 3]; 3]) -> FiniteMonoid {
    validate_monoid(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), 0).expect("catalog table")
}

/// All catalog entries in a fixed order.
pub fn catalog() -> Vec<(&'static str, FiniteMonoid)> {
    vec![
        ("trivial", FiniteMonoid::trivial()),
        ("z2", FiniteMonoid::cyclic(2)),
        // {1, 0} with 0·0 = 0
        ("u2", validate_monoid(&[vec![0, 1], vec![1, 1]], 0).expect("catalog table")),
        ("z3", FiniteMonoid::cyclic(3)),
        // Z/2 with a zero adjoined
        ("z2_zero", order3([[0, 1, 2], [1, 0, 2], [2, 2, 2]])),
        // {1, t, t² = 0}
        ("nil3", order3([[0, 1, 2], [1, 1, 1], [2, 1, 1]])),
        // chain 1 > e > 0
        ("chain3", order3([[0, 1, 2], [1, 1, 1], [2, 1, 2]])),
        // two left zeros: xy = x
        ("left_zero3", order3([[0, 1, 2], [1, 1, 1], [2, 2, 2]])),
        // two right zeros: xy = y
        ("right_zero3", order3([[0, 1, 2], [1, 1, 2], [2, 1, 2]])),
        // Z/2 with an external identity adjoined
        ("z2_one", order3([[0, 1, 2], [1, 1, 2], [2, 2, 1]])),
        ("z4", FiniteMonoid::cyclic(4)),
        ("klein", FiniteMonoid::cyclic(2).direct_product(&FiniteMonoid::cyclic(2))),
        ("z5", FiniteMonoid::cyclic(5)),
        ("z6", FiniteMonoid::cyclic(6)),
    ]
}

pub fn lookup(name: &str) -> Option<FiniteMonoid> {
    catalog().into_iter().find(|(n, _)| *n == name).map(|(_, m)| m)
}

/// Catalog entries with at most `max_order` elements.
pub fn up_to_order(max_order: usize) -> Vec<(&'static str, FiniteMonoid)> {
    catalog().into_iter().filter(|(_, m)| m.elements().len() <= max_order).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::Monoid;

    fn isomorphic(a: &FiniteMonoid, b: &FiniteMonoid) -> bool {
        let n = a.size();
        if n != b.size() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if perm[a.identity()] == b.identity()
                && (0..n).all(|i| (0..n).all(|j| perm[a.mul(i, j)] == b.mul(perm[i], perm[j])))
            {
                return true;
            }
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { return false };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }

    /// Every associative table on 3 elements with unit 0 is isomorphic to exactly one entry.
    #[test]
    fn order_three_is_complete_and_irredundant() {
        let three: Vec<FiniteMonoid> = up_to_order(3).into_iter().map(|(_, m)| m).filter(|m| m.size() == 3).collect();
        assert_eq!(three.len(), 7);
        let mut found = 0;
        for code in 0..3usize.pow(4) {
            let v = |k: usize| (code / 3usize.pow(k as u32)) % 3;
            let rows = vec![vec![0, 1, 2], vec![1, v(0), v(1)], vec![2, v(2), v(3)]];
            let Ok(m) = validate_monoid(&rows, 0) else { continue };
            found += 1;
            assert_eq!(three.iter().filter(|c| isomorphic(&m, c)).count(), 1, "{rows:?}");
        }
        assert_eq!(found, 11);
        for (i, a) in three.iter().enumerate() {
            for b in &three[i + 1..] {
                assert!(!isomorphic(a, b));
            }
        }
    }

    #[test]
    fn order_two_and_groups() {
        let two: Vec<_> = catalog().into_iter().filter(|(_, m)| m.size() == 2).collect();
        assert_eq!(two.len(), 2);
        assert!(!isomorphic(&two[0].1, &two[1].1));
        for name in ["z4", "klein", "z5", "z6"] {
            assert!(lookup(name).unwrap().is_group());
        }
        assert!(!isomorphic(&lookup("z4").unwrap(), &lookup("klein").unwrap()));
    }
}
