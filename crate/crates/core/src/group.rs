//! Finite groups given by explicit multiplication tables.

use crate::error::{Error, Result};

/// A finite group presented by a total multiplication table over element ids
/// `0..n`. The inverse table is derived, never supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinGroup {
    /// Element names, index = element id.
    pub elements: Vec<String>,
    /// `mult[a][b]` = id of `a * b`.
    pub mult: Vec<Vec<usize>>,
    /// Id of the unit element.
    pub unit: usize,
    /// `inv[a]` = id of the two-sided inverse of `a`.
    pub inv: Vec<usize>,
}

impl FinGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.elements[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mult[a][b] == self.mult[b][a]))
    }
}

/// Checks all group axioms on the table and derives the inverse table.
///
/// The declared unit must be two-sided; associativity is checked over all
/// triples; inverses are found by table search. Each failure names the
/// witnessing tuple.
pub fn make_fin_group(
    elements: Vec<String>,
    mult: Vec<Vec<usize>>,
    unit: usize,
) -> Result<FinGroup> {
    let n = elements.len();
    if n == 0 {
        return Err(Error::Invalid("a group needs at least one element".into()));
    }
    if mult.len() != n || mult.iter().any(|row| row.len() != n) {
        return Err(Error::Invalid(format!(
            "multiplication table must be {n}x{n}"
        )));
    }
    if let Some((a, b)) = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| mult[a][b] >= n)
    {
        return Err(Error::Invalid(format!(
            "mult[{}][{}] = {} out of range",
            elements[a], elements[b], mult[a][b]
        )));
    }
    if unit >= n {
        return Err(Error::Invalid(format!("unit id {unit} out of range")));
    }
    if let Some(a) = (0..n).find(|&a| mult[unit][a] != a || mult[a][unit] != a) {
        return Err(Error::NoUnit(elements[unit].clone(), elements[a].clone()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                    return Err(Error::NotAssociative(
                        elements[a].clone(),
                        elements[b].clone(),
                        elements[c].clone(),
                    ));
                }
            }
        }
    }
    let mut inv = Vec::with_capacity(n);
    for a in 0..n {
        match (0..n).find(|&b| mult[a][b] == unit && mult[b][a] == unit) {
            Some(b) => inv.push(b),
            None => return Err(Error::NoInverse(elements[a].clone())),
        }
    }
    Ok(FinGroup {
        elements,
        mult,
        unit,
        inv,
    })
}

/// The cyclic group of order `n`, elements named `e, g, g2, ...`.
pub fn cyclic_group(n: usize) -> FinGroup {
    assert!(n >= 1);
    let elements = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let mult = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    make_fin_group(elements, mult, 0).expect("cyclic table is a group")
}

/// The Klein four-group C2 x C2.
pub fn klein_four_group() -> FinGroup {
    let elements = vec!["e".into(), "a".into(), "b".into(), "ab".into()];
    let mult = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    make_fin_group(elements, mult, 0).expect("klein table is a group")
}

/// The symmetric group S3 as permutations of three points.
///
/// Elements are named by cycle notation; `mult[a][b]` is "apply b, then a".
pub fn symmetric_group_3() -> FinGroup {
    // Permutations as images of (0,1,2).
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 2, 0], // (012)
        [2, 0, 1], // (021)
        [1, 0, 2], // (01)
        [0, 2, 1], // (12)
        [2, 1, 0], // (02)
    ];
    let names = ["e", "r", "r2", "s01", "s12", "s02"];
    let compose = |a: &[usize; 3], b: &[usize; 3]| {
        let mut out = [0usize; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = a[b[i]];
        }
        out
    };
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mult = perms
        .iter()
        .map(|a| perms.iter().map(|b| index(&compose(a, b))).collect())
        .collect();
    make_fin_group(names.iter().map(|s| s.to_string()).collect(), mult, 0)
        .expect("s3 table is a group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = make_fin_group(vec!["e".into()], vec![vec![0]], 0).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv, vec![0]);
    }

    #[test]
    fn c2_inverse_is_identity_map() {
        let g = cyclic_group(2);
        assert_eq!(g.inv, vec![0, 1]);
    }

    #[test]
    fn corrupted_c4_reports_witness_triple() {
        let mut mult: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        mult[2][2] = 1; // g2 * g2 should be e
        let err = make_fin_group(
            vec!["e".into(), "g".into(), "g2".into(), "g3".into()],
            mult,
            0,
        )
        .unwrap_err();
        match err {
            Error::NotAssociative(a, b, c) => {
                // brute force over all triples found some witness touching g2*g2
                assert!([a, b, c].iter().any(|x| x == "g2"));
            }
            other => panic!("expected NotAssociative, got {other}"),
        }
    }

    #[test]
    fn s3_is_not_abelian_and_has_trivial_center() {
        let g = symmetric_group_3();
        assert!(!g.is_abelian());
        let central = (0..6)
            .filter(|&z| (0..6).all(|x| g.mul(z, x) == g.mul(x, z)))
            .count();
        assert_eq!(central, 1);
    }

    #[test]
    fn no_unit_reported() {
        // table of left projection: a*b = a; 0 is not a left unit
        let err = make_fin_group(
            vec!["x".into(), "y".into()],
            vec![vec![0, 0], vec![1, 1]],
            0,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoUnit(..)));
    }
}
