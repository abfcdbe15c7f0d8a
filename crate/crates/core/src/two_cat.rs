//! Finite strict 2-categories: per-hom finite categories plus horizontal
//! composition tables, with exhaustive structural validation and the standard
//! small fixtures (unit 2-category, deloopings, 2-groups).

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::cat::{FinCat, Mor};
use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::report::{AxiomTag, ValidationReport};

/// Reference to a 1-cell: 0-cell endpoints plus the object index inside the
/// hom category `hom(src, tgt)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell1Ref {
    pub src: usize,
    pub tgt: usize,
    pub obj: usize,
}

/// Reference to a 2-cell: 0-cell endpoints, the morphism index inside
/// `hom(src, tgt)`, and the 1-cells it connects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell2Ref {
    pub src: usize,
    pub tgt: usize,
    pub mor: usize,
    /// Object index of the source 1-cell in `hom(src, tgt)`.
    pub from1: usize,
    /// Object index of the target 1-cell in `hom(src, tgt)`.
    pub to1: usize,
}

impl Cell2Ref {
    pub fn source_1cell(&self) -> Cell1Ref {
        Cell1Ref { src: self.src, tgt: self.tgt, obj: self.from1 }
    }

    pub fn target_1cell(&self) -> Cell1Ref {
        Cell1Ref { src: self.src, tgt: self.tgt, obj: self.to1 }
    }
}

/// A finite strict 2-category.
///
/// Horizontal composition is written `x . y` for `y: A -> B` then
/// `x: B -> C`; the tables are indexed `hcomp1[(a,b,c)][x][y]` with `x` an
/// object of `hom(b,c)` and `y` an object of `hom(a,b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fin2Cat {
    pub cells0: Vec<String>,
    /// One hom category per ordered pair of 0-cells.
    pub hom: BTreeMap<(usize, usize), FinCat>,
    pub hcomp1: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
    pub hcomp2: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
    /// `unit1[a]` = object index of the identity 1-cell in `hom(a,a)`.
    pub unit1: Vec<usize>,
}

impl Fin2Cat {
    pub fn n_cells0(&self) -> usize {
        self.cells0.len()
    }

    pub fn hom(&self, a: usize, b: usize) -> &FinCat {
        &self.hom[&(a, b)]
    }

    /// Identity 1-cell of a 0-cell.
    pub fn unit(&self, a: usize) -> Cell1Ref {
        Cell1Ref { src: a, tgt: a, obj: self.unit1[a] }
    }

    pub fn one_cell(&self, a: usize, b: usize, obj: usize) -> Cell1Ref {
        Cell1Ref { src: a, tgt: b, obj }
    }

    pub fn two_cell(&self, a: usize, b: usize, mor: usize) -> Cell2Ref {
        let m = &self.hom(a, b).morphisms[mor];
        Cell2Ref { src: a, tgt: b, mor, from1: m.src, to1: m.tgt }
    }

    /// Identity 2-cell of a 1-cell.
    pub fn id2(&self, x: Cell1Ref) -> Cell2Ref {
        let mor = self.hom(x.src, x.tgt).id_of(x.obj);
        self.two_cell(x.src, x.tgt, mor)
    }

    /// All 1-cells of all homs.
    pub fn all_1cells(&self) -> Vec<Cell1Ref> {
        let mut out = Vec::new();
        for (&(a, b), h) in &self.hom {
            for obj in 0..h.n_objects() {
                out.push(Cell1Ref { src: a, tgt: b, obj });
            }
        }
        out
    }

    /// All 2-cells of all homs.
    pub fn all_2cells(&self) -> Vec<Cell2Ref> {
        let mut out = Vec::new();
        for (&(a, b), h) in &self.hom {
            for mor in 0..h.n_morphisms() {
                out.push(self.two_cell(a, b, mor));
            }
        }
        out
    }

    pub fn n_1cells(&self) -> usize {
        self.hom.values().map(|h| h.n_objects()).sum()
    }

    pub fn n_2cells(&self) -> usize {
        self.hom.values().map(|h| h.n_morphisms()).sum()
    }

    pub fn name0(&self, a: usize) -> &str {
        &self.cells0[a]
    }

    pub fn name1(&self, x: Cell1Ref) -> &str {
        &self.hom(x.src, x.tgt).objects[x.obj]
    }

    pub fn name2(&self, u: Cell2Ref) -> &str {
        self.hom(u.src, u.tgt).mor_name(u.mor)
    }

    /// Table-level structural equality, ignoring cell names.
    pub fn same_tables(&self, other: &Fin2Cat) -> bool {
        if self.n_cells0() != other.n_cells0() || self.unit1 != other.unit1 {
            return false;
        }
        let strip = |c: &FinCat| {
            (
                c.n_objects(),
                c.morphisms.iter().map(|m| (m.src, m.tgt)).collect::<Vec<_>>(),
                c.compose.clone(),
                c.identity.clone(),
            )
        };
        self.hom.len() == other.hom.len()
            && self
                .hom
                .iter()
                .zip(other.hom.iter())
                .all(|((k1, v1), (k2, v2))| k1 == k2 && strip(v1) == strip(v2))
            && self.hcomp1 == other.hcomp1
            && self.hcomp2 == other.hcomp2
    }
}

/// Horizontal composition of 1-cells: `x . y` with `y` first.
pub fn hcompose(b: &Fin2Cat, x: Cell1Ref, y: Cell1Ref) -> Result<Cell1Ref> {
    if y.tgt != x.src {
        return Err(Error::NotComposable(format!(
            "1-cells {}: {} -> {} and {}: {} -> {}",
            b.name1(x),
            b.name0(x.src),
            b.name0(x.tgt),
            b.name1(y),
            b.name0(y.src),
            b.name0(y.tgt),
        )));
    }
    let table = b
        .hcomp1
        .get(&(y.src, x.src, x.tgt))
        .ok_or_else(|| Error::NotComposable("missing hcomp1 table".into()))?;
    Ok(Cell1Ref { src: y.src, tgt: x.tgt, obj: table[x.obj][y.obj] })
}

/// Vertical composition of 2-cells in a hom category: `u . v` with `v` first.
pub fn vcompose(b: &Fin2Cat, u: Cell2Ref, v: Cell2Ref) -> Result<Cell2Ref> {
    if (u.src, u.tgt) != (v.src, v.tgt) || v.to1 != u.from1 {
        return Err(Error::NotComposable(format!(
            "2-cells {} and {} are not vertically composable",
            b.name2(u),
            b.name2(v)
        )));
    }
    let mor = b
        .hom(u.src, u.tgt)
        .comp(u.mor, v.mor)
        .ok_or_else(|| Error::NotComposable("vertical composite undefined".into()))?;
    Ok(b.two_cell(u.src, u.tgt, mor))
}

/// Horizontal composition of 2-cells: `u . v` with `v` first.
pub fn hcompose2(b: &Fin2Cat, u: Cell2Ref, v: Cell2Ref) -> Result<Cell2Ref> {
    if v.tgt != u.src {
        return Err(Error::NotComposable(format!(
            "2-cells {} and {} are not horizontally composable",
            b.name2(u),
            b.name2(v)
        )));
    }
    let table = b
        .hcomp2
        .get(&(v.src, u.src, u.tgt))
        .ok_or_else(|| Error::NotComposable("missing hcomp2 table".into()))?;
    Ok(b.two_cell(v.src, u.tgt, table[u.mor][v.mor]))
}

/// Strict two-sided inverse of a 1-cell: `y` with `x.y = I` and `y.x = I`
/// exactly, found by exhaustive search over `hom(tgt, src)`. Inverses are
/// unique when they exist.
pub fn find_inverse_1cell(b: &Fin2Cat, x: Cell1Ref) -> Option<Cell1Ref> {
    let back = b.hom.get(&(x.tgt, x.src))?;
    (0..back.n_objects())
        .map(|obj| Cell1Ref { src: x.tgt, tgt: x.src, obj })
        .find(|&y| {
            hcompose(b, x, y).map(|c| c.obj) == Ok(b.unit1[x.tgt])
                && hcompose(b, y, x).map(|c| c.obj) == Ok(b.unit1[x.src])
        })
}

/// Invertibility of a 2-cell under vertical composition.
pub fn invert_2cell(b: &Fin2Cat, u: Cell2Ref) -> Option<Cell2Ref> {
    let mor = b.hom(u.src, u.tgt).inverse(u.mor)?;
    Some(b.two_cell(u.src, u.tgt, mor))
}

/// Exhaustive check of every 2-category axiom, instance by instance.
pub fn validate_2category(b: &Fin2Cat) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n = b.n_cells0();
    if n == 0 {
        r.push(AxiomTag::Reference, "a 2-category needs at least one 0-cell");
        return r.finish();
    }
    // hom categories present and valid
    for a in 0..n {
        for c in 0..n {
            match b.hom.get(&(a, c)) {
                Some(h) => {
                    r.absorb(h.validate(&format!("hom({},{})", b.name0(a), b.name0(c))));
                }
                None => r.push(
                    AxiomTag::Reference,
                    format!("missing hom({},{})", b.name0(a), b.name0(c)),
                ),
            }
        }
    }
    if b.unit1.len() != n {
        r.push(AxiomTag::Reference, "unit1 table has wrong length");
    }
    if !r.passed() {
        return r.finish();
    }
    for a in 0..n {
        if b.unit1[a] >= b.hom(a, a).n_objects() {
            r.push(
                AxiomTag::Reference,
                format!("unit1[{}] = {} out of range", b.name0(a), b.unit1[a]),
            );
        }
    }
    // hcomp tables: defined exactly on composable triples, in range, endpoint-correct
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                let key = (a, c, d);
                let (nbc, nab) = (b.hom(c, d).n_objects(), b.hom(a, c).n_objects());
                let (mbc, mab) = (b.hom(c, d).n_morphisms(), b.hom(a, c).n_morphisms());
                match b.hcomp1.get(&key) {
                    None => r.push(
                        AxiomTag::Reference,
                        format!("missing hcomp1[{},{},{}]", b.name0(a), b.name0(c), b.name0(d)),
                    ),
                    Some(t) => {
                        if t.len() != nbc || t.iter().any(|row| row.len() != nab) {
                            r.push(
                                AxiomTag::Reference,
                                format!(
                                    "hcomp1[{},{},{}] has wrong shape",
                                    b.name0(a),
                                    b.name0(c),
                                    b.name0(d)
                                ),
                            );
                        } else {
                            for (x, row) in t.iter().enumerate() {
                                for (y, &v) in row.iter().enumerate() {
                                    if v >= b.hom(a, d).n_objects() {
                                        r.push(
                                            AxiomTag::Reference,
                                            format!(
                                                "hcomp1[{},{},{}][{},{}] = {} out of range",
                                                b.name0(a),
                                                b.name0(c),
                                                b.name0(d),
                                                b.hom(c, d).objects[x],
                                                b.hom(a, c).objects[y],
                                                v
                                            ),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
                match b.hcomp2.get(&key) {
                    None => r.push(
                        AxiomTag::Reference,
                        format!("missing hcomp2[{},{},{}]", b.name0(a), b.name0(c), b.name0(d)),
                    ),
                    Some(t) => {
                        if t.len() != mbc || t.iter().any(|row| row.len() != mab) {
                            r.push(
                                AxiomTag::Reference,
                                format!(
                                    "hcomp2[{},{},{}] has wrong shape",
                                    b.name0(a),
                                    b.name0(c),
                                    b.name0(d)
                                ),
                            );
                        } else {
                            for (u, row) in t.iter().enumerate() {
                                for (v, &w) in row.iter().enumerate() {
                                    if w >= b.hom(a, d).n_morphisms() {
                                        r.push(
                                            AxiomTag::Reference,
                                            format!(
                                                "hcomp2[{},{},{}][{},{}] = {} out of range",
                                                b.name0(a),
                                                b.name0(c),
                                                b.name0(d),
                                                b.hom(c, d).mor_name(u),
                                                b.hom(a, c).mor_name(v),
                                                w
                                            ),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if !r.passed() {
        return r.finish();
    }

    let h1 = |a: usize, c: usize, d: usize, x: usize, y: usize| b.hcomp1[&(a, c, d)][x][y];

    // strict unit laws for 1-cells
    for a in 0..n {
        for c in 0..n {
            for y in 0..b.hom(a, c).n_objects() {
                let l = h1(a, c, c, b.unit1[c], y);
                let rr = h1(a, a, c, y, b.unit1[a]);
                if l != y || rr != y {
                    r.push(
                        AxiomTag::UnitOrAssoc,
                        format!(
                            "unit law fails at 1-cell {} in hom({},{})",
                            b.hom(a, c).objects[y],
                            b.name0(a),
                            b.name0(c)
                        ),
                    );
                }
            }
        }
    }
    // associativity of hcomp1 over all composable triples
    let mut quads: Vec<(usize, usize, usize, usize)> = Vec::new();
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                for e in 0..n {
                    quads.push((a, c, d, e));
                }
            }
        }
    }
    let assoc_violations: Vec<Violations> = quads
        .par_iter()
        .map(|&(a, c, d, e)| {
            let mut out = Vec::new();
            for x in 0..b.hom(d, e).n_objects() {
                for y in 0..b.hom(c, d).n_objects() {
                    for z in 0..b.hom(a, c).n_objects() {
                        let xy_z = h1(a, c, e, h1(c, d, e, x, y), z);
                        let x_yz = h1(a, d, e, x, h1(a, c, d, y, z));
                        if xy_z != x_yz {
                            out.push((
                                AxiomTag::UnitOrAssoc,
                                format!(
                                    "hcomp1 associativity fails at ({}, {}, {}) over ({},{},{},{})",
                                    b.hom(d, e).objects[x],
                                    b.hom(c, d).objects[y],
                                    b.hom(a, c).objects[z],
                                    b.name0(a),
                                    b.name0(c),
                                    b.name0(d),
                                    b.name0(e)
                                ),
                            ));
                        }
                    }
                }
            }
            out
        })
        .collect();
    for vs in assoc_violations {
        for (tag, w) in vs {
            r.push(tag, w);
        }
    }

    // hcomp2 is a functor hom(b,c) x hom(a,b) -> hom(a,c)
    let tri: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |c| (0..n).map(move |d| (a, c, d))))
        .collect();
    let funct_violations: Vec<Violations> = tri
        .par_iter()
        .map(|&(a, c, d)| {
            let mut out = Vec::new();
            let left = b.hom(c, d);
            let right = b.hom(a, c);
            let target = b.hom(a, d);
            let t2 = &b.hcomp2[&(a, c, d)];
            let t1 = &b.hcomp1[&(a, c, d)];
            // endpoints and identity preservation
            for u in 0..left.n_morphisms() {
                for v in 0..right.n_morphisms() {
                    let w = t2[u][v];
                    let (us, ut) = (left.morphisms[u].src, left.morphisms[u].tgt);
                    let (vs, vt) = (right.morphisms[v].src, right.morphisms[v].tgt);
                    if target.morphisms[w].src != t1[us][vs] || target.morphisms[w].tgt != t1[ut][vt]
                    {
                        out.push((
                            AxiomTag::Interchange,
                            format!(
                                "hcomp2 endpoint mismatch at ({}, {}) over ({},{},{})",
                                left.mor_name(u),
                                right.mor_name(v),
                                b.name0(a),
                                b.name0(c),
                                b.name0(d)
                            ),
                        ));
                    }
                }
            }
            for x in 0..left.n_objects() {
                for y in 0..right.n_objects() {
                    if t2[left.id_of(x)][right.id_of(y)] != target.id_of(t1[x][y]) {
                        out.push((
                            AxiomTag::Interchange,
                            format!(
                                "hcomp2 does not preserve identities at ({}, {}) over ({},{},{})",
                                left.objects[x],
                                right.objects[y],
                                b.name0(a),
                                b.name0(c),
                                b.name0(d)
                            ),
                        ));
                    }
                }
            }
            // interchange: (u'.u) o (v'.v) = (u' o v') . (u o v)
            for u in 0..left.n_morphisms() {
                for up in 0..left.n_morphisms() {
                    if left.morphisms[up].src != left.morphisms[u].tgt {
                        continue;
                    }
                    for v in 0..right.n_morphisms() {
                        for vp in 0..right.n_morphisms() {
                            if right.morphisms[vp].src != right.morphisms[v].tgt {
                                continue;
                            }
                            let lhs = left
                                .comp(up, u)
                                .zip(right.comp(vp, v))
                                .map(|(uu, vv)| t2[uu][vv]);
                            let rhs = target.comp(t2[up][vp], t2[u][v]);
                            if lhs != rhs || lhs.is_none() {
                                out.push((
                                    AxiomTag::Interchange,
                                    format!(
                                        "interchange fails at ({}, {}, {}, {}) over ({},{},{})",
                                        left.mor_name(up),
                                        left.mor_name(u),
                                        right.mor_name(vp),
                                        right.mor_name(v),
                                        b.name0(a),
                                        b.name0(c),
                                        b.name0(d)
                                    ),
                                ));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    for vs in funct_violations {
        for (tag, w) in vs {
            r.push(tag, w);
        }
    }

    // associativity of hcomp2 and 2-cell unit law
    let h2 = |a: usize, c: usize, d: usize, u: usize, v: usize| b.hcomp2[&(a, c, d)][u][v];
    for &(a, c, d, e) in &quads {
        for u in 0..b.hom(d, e).n_morphisms() {
            for v in 0..b.hom(c, d).n_morphisms() {
                for w in 0..b.hom(a, c).n_morphisms() {
                    let uv_w = h2(a, c, e, h2(c, d, e, u, v), w);
                    let u_vw = h2(a, d, e, u, h2(a, c, d, v, w));
                    if uv_w != u_vw {
                        r.push(
                            AxiomTag::UnitOrAssoc,
                            format!(
                                "hcomp2 associativity fails at ({}, {}, {})",
                                b.hom(d, e).mor_name(u),
                                b.hom(c, d).mor_name(v),
                                b.hom(a, c).mor_name(w)
                            ),
                        );
                    }
                }
            }
        }
    }
    for a in 0..n {
        for c in 0..n {
            let idr = b.hom(c, c).id_of(b.unit1[c]);
            let idl = b.hom(a, a).id_of(b.unit1[a]);
            for u in 0..b.hom(a, c).n_morphisms() {
                if h2(a, c, c, idr, u) != u || h2(a, a, c, u, idl) != u {
                    r.push(
                        AxiomTag::UnitOrAssoc,
                        format!(
                            "identity 2-cell of a unit 1-cell is not a unit at {}",
                            b.hom(a, c).mor_name(u)
                        ),
                    );
                }
            }
        }
    }
    r.finish()
}

type Violations = Vec<(AxiomTag, String)>;

/// The unit 2-category: one 0-cell, one 1-cell, one 2-cell.
pub fn unit_2cat() -> Fin2Cat {
    let hom = FinCat {
        objects: vec!["I".into()],
        morphisms: vec![Mor { src: 0, tgt: 0, name: "id_I".into() }],
        compose: vec![vec![Some(0)]],
        identity: vec![0],
    };
    let mut homs = BTreeMap::new();
    homs.insert((0, 0), hom);
    let mut hcomp1 = BTreeMap::new();
    hcomp1.insert((0, 0, 0), vec![vec![0]]);
    let mut hcomp2 = BTreeMap::new();
    hcomp2.insert((0, 0, 0), vec![vec![0]]);
    Fin2Cat {
        cells0: vec!["star".into()],
        hom: homs,
        hcomp1,
        hcomp2,
        unit1: vec![0],
    }
}

/// The delooping of a group: one 0-cell, 1-cells the group elements with
/// horizontal composition the multiplication, and only identity 2-cells.
pub fn delooping(g: &FinGroup) -> Fin2Cat {
    let n = g.order();
    let hom = FinCat {
        objects: g.elements.clone(),
        morphisms: (0..n)
            .map(|i| Mor { src: i, tgt: i, name: format!("id_{}", g.name(i)) })
            .collect(),
        compose: (0..n)
            .map(|f| (0..n).map(|h| if f == h { Some(f) } else { None }).collect())
            .collect(),
        identity: (0..n).collect(),
    };
    let mut homs = BTreeMap::new();
    homs.insert((0, 0), hom);
    let mut hcomp1 = BTreeMap::new();
    hcomp1.insert((0, 0, 0), g.mult.clone());
    let mut hcomp2 = BTreeMap::new();
    hcomp2.insert((0, 0, 0), g.mult.clone());
    Fin2Cat {
        cells0: vec!["star".into()],
        hom: homs,
        hcomp1,
        hcomp2,
        unit1: vec![g.unit],
    }
}

/// The double delooping of an abelian group: one 0-cell, one 1-cell, and
/// 2-cells the group elements under both compositions.
pub fn double_delooping(g: &FinGroup) -> Result<Fin2Cat> {
    if !g.is_abelian() {
        return Err(Error::Invalid(
            "double delooping needs an abelian group (interchange)".into(),
        ));
    }
    let n = g.order();
    let hom = FinCat {
        objects: vec!["I".into()],
        morphisms: (0..n)
            .map(|i| Mor { src: 0, tgt: 0, name: g.name(i).to_string() })
            .collect(),
        compose: (0..n)
            .map(|f| (0..n).map(|h| Some(g.mul(f, h))).collect())
            .collect(),
        identity: vec![g.unit],
    };
    let mut homs = BTreeMap::new();
    homs.insert((0, 0), hom);
    let mut hcomp1 = BTreeMap::new();
    hcomp1.insert((0, 0, 0), vec![vec![0]]);
    let mut hcomp2 = BTreeMap::new();
    hcomp2.insert((0, 0, 0), g.mult.clone());
    Ok(Fin2Cat {
        cells0: vec!["star".into()],
        hom: homs,
        hcomp1,
        hcomp2,
        unit1: vec![g.unit],
    })
}

/// A strict 2-group with 1-cells `pi1` and, on every 1-cell, an automorphism
/// group `pi2` of 2-cells; horizontal composition multiplies both layers.
pub fn strict_two_group(pi1: &FinGroup, pi2: &FinGroup) -> Result<Fin2Cat> {
    if !pi2.is_abelian() {
        return Err(Error::Invalid("pi2 of a 2-group must be abelian".into()));
    }
    let n1 = pi1.order();
    let n2 = pi2.order();
    // morphism (x, a): 1-cell x with label a
    let midx = |x: usize, a: usize| x * n2 + a;
    let morphisms = (0..n1)
        .flat_map(|x| {
            (0..n2).map(move |a| (x, a))
        })
        .map(|(x, a)| Mor {
            src: x,
            tgt: x,
            name: format!("{}[{}]", pi1.name(x), pi2.name(a)),
        })
        .collect();
    let nm = n1 * n2;
    let compose = (0..nm)
        .map(|f| {
            (0..nm)
                .map(|g| {
                    let (x, a) = (f / n2, f % n2);
                    let (y, b) = (g / n2, g % n2);
                    if x == y {
                        Some(midx(x, pi2.mul(a, b)))
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    let hom = FinCat {
        objects: pi1.elements.clone(),
        morphisms,
        compose,
        identity: (0..n1).map(|x| midx(x, pi2.unit)).collect(),
    };
    let mut homs = BTreeMap::new();
    homs.insert((0, 0), hom);
    let mut hcomp1 = BTreeMap::new();
    hcomp1.insert((0, 0, 0), pi1.mult.clone());
    let mut hcomp2 = BTreeMap::new();
    hcomp2.insert(
        (0, 0, 0),
        (0..nm)
            .map(|f| {
                (0..nm)
                    .map(|g| {
                        let (x, a) = (f / n2, f % n2);
                        let (y, b) = (g / n2, g % n2);
                        midx(pi1.mul(x, y), pi2.mul(a, b))
                    })
                    .collect()
            })
            .collect(),
    );
    Ok(Fin2Cat {
        cells0: vec!["star".into()],
        hom: homs,
        hcomp1,
        hcomp2,
        unit1: vec![pi1.unit],
    })
}

/// The 2-category obtained by reversing 1-cells: homs are transposed, both
/// horizontal compositions swap their arguments, 2-cells keep direction.
pub fn op_2category(b: &Fin2Cat) -> Fin2Cat {
    let n = b.n_cells0();
    let mut hom = BTreeMap::new();
    for (&(a, c), h) in &b.hom {
        hom.insert((c, a), h.clone());
    }
    let mut hcomp1 = BTreeMap::new();
    let mut hcomp2 = BTreeMap::new();
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                // in op: hom_op(d,c) x hom_op(c,a) -> hom_op(d,a) is
                // hom(c,d) x hom(a,c) -> hom(a,d) with arguments swapped
                let t1 = &b.hcomp1[&(a, c, d)];
                let t2 = &b.hcomp2[&(a, c, d)];
                let nx = b.hom(a, c).n_objects();
                let ny = b.hom(c, d).n_objects();
                hcomp1.insert(
                    (d, c, a),
                    (0..nx).map(|x| (0..ny).map(|y| t1[y][x]).collect()).collect(),
                );
                let mx = b.hom(a, c).n_morphisms();
                let my = b.hom(c, d).n_morphisms();
                hcomp2.insert(
                    (d, c, a),
                    (0..mx).map(|u| (0..my).map(|v| t2[v][u]).collect()).collect(),
                );
            }
        }
    }
    Fin2Cat {
        cells0: b.cells0.clone(),
        hom,
        hcomp1,
        hcomp2,
        unit1: b.unit1.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, klein_four_group, symmetric_group_3};

    #[test]
    fn unit_2cat_passes() {
        assert!(validate_2category(&unit_2cat()).passed());
    }

    #[test]
    fn deloopings_pass_for_all_fixture_groups() {
        for g in [
            cyclic_group(1),
            cyclic_group(2),
            cyclic_group(3),
            cyclic_group(4),
            klein_four_group(),
            symmetric_group_3(),
        ] {
            let b = delooping(&g);
            assert!(validate_2category(&b).passed(), "delooping of {:?}", g.elements);
        }
    }

    #[test]
    fn delooping_of_trivial_group_matches_unit_2cat() {
        assert!(delooping(&cyclic_group(1)).same_tables(&unit_2cat()));
    }

    #[test]
    fn delooping_c4_cell_counts() {
        let b = delooping(&cyclic_group(4));
        assert_eq!(b.n_cells0(), 1);
        assert_eq!(b.n_1cells(), 4);
        assert_eq!(b.n_2cells(), 4);
    }

    #[test]
    fn rewired_delooping_fails_unit_or_assoc() {
        let mut b = delooping(&cyclic_group(2));
        // s . s rewired to s
        b.hcomp1.get_mut(&(0, 0, 0)).unwrap()[1][1] = 1;
        let r = validate_2category(&b);
        assert!(!r.passed());
        assert!(r.has_tag(AxiomTag::UnitOrAssoc));
    }

    #[test]
    fn hcompose_follows_the_group_table() {
        let c2 = cyclic_group(2);
        let b = delooping(&c2);
        let s = b.one_cell(0, 0, 1);
        assert_eq!(hcompose(&b, s, s).unwrap().obj, 0);
        let c4 = cyclic_group(4);
        let b4 = delooping(&c4);
        let g1 = b4.one_cell(0, 0, 1);
        assert_eq!(hcompose(&b4, g1, g1).unwrap().obj, 2);
    }

    #[test]
    fn hcompose_rejects_mismatched_endpoints() {
        let b = walking_arrow();
        let f = b.one_cell(0, 1, 0);
        assert!(matches!(hcompose(&b, f, f), Err(Error::NotComposable(_))));
    }

    #[test]
    fn inverse_searches() {
        let b = delooping(&cyclic_group(2));
        assert_eq!(find_inverse_1cell(&b, b.unit(0)), Some(b.unit(0)));
        let s = b.one_cell(0, 0, 1);
        assert_eq!(find_inverse_1cell(&b, s), Some(s));
        // one-way arrow has no inverse
        let arrow = walking_arrow();
        assert_eq!(find_inverse_1cell(&arrow, arrow.one_cell(0, 1, 0)), None);
    }

    #[test]
    fn inverse_is_symmetric() {
        let b = delooping(&cyclic_group(4));
        for x in b.all_1cells() {
            if let Some(y) = find_inverse_1cell(&b, x) {
                assert_eq!(find_inverse_1cell(&b, y), Some(x));
            }
        }
    }

    #[test]
    fn op_is_an_involution() {
        for b in [
            delooping(&cyclic_group(2)),
            delooping(&symmetric_group_3()),
            walking_arrow(),
            strict_two_group(&cyclic_group(2), &cyclic_group(2)).unwrap(),
        ] {
            assert!(validate_2category(&op_2category(&b)).passed());
            assert_eq!(op_2category(&op_2category(&b)), b);
        }
    }

    #[test]
    fn two_level_fixtures_pass() {
        assert!(validate_2category(&double_delooping(&cyclic_group(4)).unwrap()).passed());
        assert!(
            validate_2category(&strict_two_group(&cyclic_group(2), &cyclic_group(2)).unwrap())
                .passed()
        );
        assert!(double_delooping(&symmetric_group_3()).is_err());
    }

    #[test]
    fn interchange_holds_tablewise_on_two_group() {
        let b = strict_two_group(&cyclic_group(2), &cyclic_group(2)).unwrap();
        let cells = b.all_2cells();
        for &u in &cells {
            for &up in &cells {
                if up.from1 != u.to1 {
                    continue;
                }
                for &v in &cells {
                    for &vp in &cells {
                        if vp.from1 != v.to1 {
                            continue;
                        }
                        let lhs = hcompose2(
                            &b,
                            vcompose(&b, up, u).unwrap(),
                            vcompose(&b, vp, v).unwrap(),
                        )
                        .unwrap();
                        let rhs = vcompose(
                            &b,
                            hcompose2(&b, up, vp).unwrap(),
                            hcompose2(&b, u, v).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    /// Two 0-cells and a single non-invertible 1-cell between them.
    pub(crate) fn walking_arrow() -> Fin2Cat {
        let mut hom = BTreeMap::new();
        hom.insert((0, 0), FinCat::discrete(vec!["I_a".into()]));
        hom.insert((1, 1), FinCat::discrete(vec!["I_b".into()]));
        hom.insert((0, 1), FinCat::discrete(vec!["f".into()]));
        hom.insert((1, 0), FinCat::empty());
        let mut hcomp1 = BTreeMap::new();
        let mut hcomp2 = BTreeMap::new();
        for a in 0..2usize {
            for c in 0..2usize {
                for d in 0..2usize {
                    let rows = hom[&(c, d)].n_objects();
                    let cols = hom[&(a, c)].n_objects();
                    let t: Vec<Vec<usize>> =
                        (0..rows).map(|_| (0..cols).map(|_| 0).collect()).collect();
                    hcomp1.insert((a, c, d), t.clone());
                    hcomp2.insert((a, c, d), t);
                }
            }
        }
        Fin2Cat {
            cells0: vec!["a".into(), "b".into()],
            hom,
            hcomp1,
            hcomp2,
            unit1: vec![0, 0],
        }
    }

    #[test]
    fn walking_arrow_is_valid() {
        assert!(validate_2category(&walking_arrow()).passed());
    }
}
