//! Small toolkit for pasting 2-cells along composites of 1-cells.
//!
//! Coherence axioms are equalities of vertical composites of whiskered
//! 2-cells. A `Track` is an explicit list of composable 1-cells (outermost
//! first, matching `x . y` notation); helpers fold the horizontal tables and
//! check every boundary, so an ill-shaped instance surfaces as a
//! `ShapeMismatch` instead of a wrong lookup.

use crate::error::{Error, Result};
use crate::two_cat::{hcompose, hcompose2, vcompose, Cell1Ref, Cell2Ref, Fin2Cat};

/// A composite of 1-cells, outermost (applied last) first. Must be nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Track(pub Vec<Cell1Ref>);

impl Track {
    pub fn one(x: Cell1Ref) -> Track {
        Track(vec![x])
    }

    pub fn of(cells: &[Cell1Ref]) -> Track {
        Track(cells.to_vec())
    }

    /// Flattens the track to a single 1-cell via the horizontal tables.
    pub fn eval(&self, b: &Fin2Cat) -> Result<Cell1Ref> {
        let mut iter = self.0.iter().rev();
        let mut acc = *iter
            .next()
            .ok_or_else(|| Error::ShapeMismatch("empty track".into()))?;
        for &x in iter {
            acc = hcompose(b, x, acc)?;
        }
        Ok(acc)
    }
}

/// `u . v` with `v` first, as plain horizontal composition.
pub fn hc2(b: &Fin2Cat, u: Cell2Ref, v: Cell2Ref) -> Result<Cell2Ref> {
    hcompose2(b, u, v)
}

/// Horizontal composite of a list of 2-cells, outermost first.
pub fn hc2_many(b: &Fin2Cat, cells: &[Cell2Ref]) -> Result<Cell2Ref> {
    let mut iter = cells.iter().rev();
    let mut acc = *iter
        .next()
        .ok_or_else(|| Error::ShapeMismatch("empty horizontal composite".into()))?;
    for &u in iter {
        acc = hcompose2(b, u, acc)?;
    }
    Ok(acc)
}

/// Identity 2-cell on a track.
pub fn id_on(b: &Fin2Cat, t: &Track) -> Result<Cell2Ref> {
    Ok(b.id2(t.eval(b)?))
}

/// Whiskers `mid` with identities of `left` and `right`:
/// `id_left . mid . id_right`. Empty tracks on either side are allowed.
pub fn whisker(
    b: &Fin2Cat,
    left: &[Cell1Ref],
    mid: Cell2Ref,
    right: &[Cell1Ref],
) -> Result<Cell2Ref> {
    let mut acc = mid;
    if !right.is_empty() {
        acc = hc2(b, acc, id_on(b, &Track::of(right))?)?;
    }
    if !left.is_empty() {
        acc = hc2(b, id_on(b, &Track::of(left))?, acc)?;
    }
    Ok(acc)
}

/// Vertical composite of steps applied first-to-last, checking that each
/// step starts where the previous one ended.
pub fn vchain(b: &Fin2Cat, steps: &[Cell2Ref]) -> Result<Cell2Ref> {
    let mut iter = steps.iter();
    let mut acc = *iter
        .next()
        .ok_or_else(|| Error::ShapeMismatch("empty vertical chain".into()))?;
    for &u in iter {
        if (u.src, u.tgt) != (acc.src, acc.tgt) || u.from1 != acc.to1 {
            return Err(Error::ShapeMismatch(format!(
                "vertical chain breaks at {}: expected source {}, found {}",
                b.name2(u),
                b.hom(acc.src, acc.tgt).objects[acc.to1],
                b.hom(u.src, u.tgt).objects[u.from1],
            )));
        }
        acc = vcompose(b, u, acc)?;
    }
    Ok(acc)
}

/// Checks a pasting equation: both chains from the same source 1-cell to the
/// same target 1-cell, equal as table entries.
pub fn chains_equal(b: &Fin2Cat, lhs: &[Cell2Ref], rhs: &[Cell2Ref]) -> Result<bool> {
    let l = vchain(b, lhs)?;
    let r = vchain(b, rhs)?;
    if (l.src, l.tgt, l.from1, l.to1) != (r.src, r.tgt, r.from1, r.to1) {
        return Err(Error::ShapeMismatch(format!(
            "pasting sides have different boundaries: {} vs {}",
            b.name2(l),
            b.name2(r)
        )));
    }
    Ok(l.mor == r.mor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic_group;
    use crate::two_cat::{delooping, strict_two_group};

    #[test]
    fn track_eval_folds_the_group() {
        let b = delooping(&cyclic_group(4));
        let g1 = b.one_cell(0, 0, 1);
        let t = Track::of(&[g1, g1, g1]);
        assert_eq!(t.eval(&b).unwrap().obj, 3);
    }

    #[test]
    fn vchain_rejects_broken_boundaries() {
        let b = strict_two_group(&cyclic_group(2), &cyclic_group(2)).unwrap();
        // tau on 1-cell s cannot follow tau on 1-cell e
        let tau_e = b.two_cell(0, 0, 1);
        let tau_s = b.two_cell(0, 0, 3);
        assert!(vchain(&b, &[tau_e, tau_s]).is_err());
        assert!(vchain(&b, &[tau_e, tau_e]).is_ok());
    }

    #[test]
    fn whisker_keeps_boundaries() {
        let b = strict_two_group(&cyclic_group(2), &cyclic_group(2)).unwrap();
        let s = b.one_cell(0, 0, 1);
        let tau_e = b.two_cell(0, 0, 1);
        let w = whisker(&b, &[s], tau_e, &[s]).unwrap();
        // s . e . s = e
        assert_eq!(w.from1, 0);
        assert_eq!(w.to1, 0);
    }
}
