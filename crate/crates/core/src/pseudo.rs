//! Pseudofunctors, pseudonatural transformations and modifications between
//! finite strict 2-categories, their tensor calculus, and the relative
//! center of a pseudofunctor as a finite strict monoidal category.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{FinCat, Mor};
use crate::error::{Error, Result};
use crate::paste::{chains_equal, hc2, id_on, vchain, whisker, Track};
use crate::report::{AxiomTag, ValidationReport};
use crate::two_cat::{hcompose, hcompose2, invert_2cell, vcompose, Cell1Ref, Cell2Ref, Fin2Cat};
use crate::{Budget, SearchCaps};

/// Object and morphism tables of one hom functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomFunctor {
    pub obj: Vec<usize>,
    pub mor: Vec<usize>,
}

/// A pseudofunctor between finite strict 2-categories: object map, hom
/// functor tables, an invertible compositor `comp[(a,b,c)][x][y]` giving
/// `F(x) . F(y) -> F(x . y)`, and a unit constraint `I_{F(A)} -> F(I_A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoFunctor {
    pub source: Arc<Fin2Cat>,
    pub target: Arc<Fin2Cat>,
    pub obj_map: Vec<usize>,
    pub hom_map: BTreeMap<(usize, usize), HomFunctor>,
    pub compositor: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
    pub unit_constraint: Vec<usize>,
    /// `F(I_A) = I_{F(A)}` and identity unit constraints.
    pub unital: bool,
    /// All compositor 2-cells are identities (a 2-functor).
    pub strict: bool,
}

impl PseudoFunctor {
    pub fn map0(&self, a: usize) -> usize {
        self.obj_map[a]
    }

    pub fn map1(&self, x: Cell1Ref) -> Cell1Ref {
        Cell1Ref {
            src: self.map0(x.src),
            tgt: self.map0(x.tgt),
            obj: self.hom_map[&(x.src, x.tgt)].obj[x.obj],
        }
    }

    pub fn map2(&self, u: Cell2Ref) -> Cell2Ref {
        let mor = self.hom_map[&(u.src, u.tgt)].mor[u.mor];
        self.target.two_cell(self.map0(u.src), self.map0(u.tgt), mor)
    }

    /// Compositor 2-cell `F(x) . F(y) -> F(x . y)` for `y: a -> b`, `x: b -> c`.
    pub fn compositor_at(&self, x: Cell1Ref, y: Cell1Ref) -> Result<Cell2Ref> {
        if y.tgt != x.src {
            return Err(Error::ShapeMismatch("compositor on non-composable pair".into()));
        }
        let mor = self.compositor[&(y.src, x.src, x.tgt)][x.obj][y.obj];
        Ok(self
            .target
            .two_cell(self.map0(y.src), self.map0(x.tgt), mor))
    }

    /// Unit constraint `phi_A: I_{F(A)} -> F(I_A)`.
    pub fn unit_at(&self, a: usize) -> Cell2Ref {
        self.target
            .two_cell(self.map0(a), self.map0(a), self.unit_constraint[a])
    }

    /// Iterated compositor `F(x1) . ... . F(xk) -> F(x1 . ... . xk)`.
    pub fn alpha_fold(&self, factors: &[Cell1Ref]) -> Result<Cell2Ref> {
        match factors {
            [] => Err(Error::ShapeMismatch("empty compositor fold".into())),
            [x] => Ok(self.target.id2(self.map1(*x))),
            [x, rest @ ..] => {
                let tail = self.alpha_fold(rest)?;
                let rest_comp = Track::of(rest).eval(&self.source)?;
                let step = hc2(&self.target, self.target.id2(self.map1(*x)), tail)?;
                vcompose(&self.target, self.compositor_at(*x, rest_comp)?, step)
            }
        }
    }

    /// Applies the functor to a 2-cell between composites, re-expressed
    /// between the composites of images:
    /// `F(x1) . ... -> F(y1) . ...` via compositor folds on both sides.
    pub fn apply_between_composites(
        &self,
        src_factors: &[Cell1Ref],
        u: Cell2Ref,
        tgt_factors: &[Cell1Ref],
    ) -> Result<Cell2Ref> {
        let src = Track::of(src_factors).eval(&self.source)?;
        let tgt = Track::of(tgt_factors).eval(&self.source)?;
        if (u.src, u.tgt, u.from1, u.to1) != (src.src, src.tgt, src.obj, tgt.obj) {
            return Err(Error::ShapeMismatch(format!(
                "2-cell {} does not run between the stated composites",
                self.source.name2(u)
            )));
        }
        let fold_src = self.alpha_fold(src_factors)?;
        let fold_tgt = self.alpha_fold(tgt_factors)?;
        let unfold_tgt = invert_2cell(&self.target, fold_tgt)
            .ok_or_else(|| Error::ShapeMismatch("compositor fold not invertible".into()))?;
        vchain(&self.target, &[fold_src, self.map2(u), unfold_tgt])
    }

    fn flags_from_tables(b: &Fin2Cat, t: &Fin2Cat, hom_map: &BTreeMap<(usize, usize), HomFunctor>,
                         obj_map: &[usize],
                         compositor: &BTreeMap<(usize, usize, usize), Vec<Vec<usize>>>,
                         unit_constraint: &[usize]) -> (bool, bool) {
        let unital = (0..b.n_cells0()).all(|a| {
            hom_map[&(a, a)].obj[b.unit1[a]] == t.unit1[obj_map[a]]
                && unit_constraint[a] == t.hom(obj_map[a], obj_map[a]).id_of(t.unit1[obj_map[a]])
        });
        let strict = compositor.iter().all(|(&(a, _, c), table)| {
            table.iter().all(|row| {
                row.iter().all(|&m| {
                    let hom = t.hom(obj_map[a], obj_map[c]);
                    hom.id_of(hom.morphisms[m].src) == m
                })
            })
        });
        (unital, strict)
    }

    /// Recomputes the `unital`/`strict` flags from the stored tables.
    pub fn computed_flags(&self) -> (bool, bool) {
        Self::flags_from_tables(
            &self.source,
            &self.target,
            &self.hom_map,
            &self.obj_map,
            &self.compositor,
            &self.unit_constraint,
        )
    }
}

/// Structural equality of two pseudofunctors (fast path on shared pointers).
pub fn same_functor(f: &PseudoFunctor, g: &PseudoFunctor) -> bool {
    (Arc::ptr_eq(&f.source, &g.source) || f.source == g.source)
        && (Arc::ptr_eq(&f.target, &g.target) || f.target == g.target)
        && f.obj_map == g.obj_map
        && f.hom_map == g.hom_map
        && f.compositor == g.compositor
        && f.unit_constraint == g.unit_constraint
}

/// The identity 2-functor.
pub fn identity_pseudofunctor(b: &Arc<Fin2Cat>) -> PseudoFunctor {
    let n = b.n_cells0();
    let mut hom_map = BTreeMap::new();
    for (&(a, c), h) in &b.hom {
        hom_map.insert(
            (a, c),
            HomFunctor {
                obj: (0..h.n_objects()).collect(),
                mor: (0..h.n_morphisms()).collect(),
            },
        );
    }
    let mut compositor = BTreeMap::new();
    for (&key, t1) in &b.hcomp1 {
        let (a, _, d) = key;
        let table = t1
            .iter()
            .map(|row| row.iter().map(|&xy| b.hom(a, d).id_of(xy)).collect())
            .collect();
        compositor.insert(key, table);
    }
    let unit_constraint = (0..n)
        .map(|a| b.hom(a, a).id_of(b.unit1[a]))
        .collect();
    PseudoFunctor {
        source: Arc::clone(b),
        target: Arc::clone(b),
        obj_map: (0..n).collect(),
        hom_map,
        compositor,
        unit_constraint,
        unital: true,
        strict: true,
    }
}

/// Composite pseudofunctor `G . F` (apply `F` first).
pub fn compose_pseudofunctors(g: &PseudoFunctor, f: &PseudoFunctor) -> Result<PseudoFunctor> {
    if !(Arc::ptr_eq(&f.target, &g.source) || f.target == g.source) {
        return Err(Error::SourceTargetMismatch(
            "target of inner functor differs from source of outer functor".into(),
        ));
    }
    let b = &f.source;
    let obj_map: Vec<usize> = f.obj_map.iter().map(|&a| g.map0(a)).collect();
    let mut hom_map = BTreeMap::new();
    for (&(a, c), hf) in &f.hom_map {
        let hg = &g.hom_map[&(f.map0(a), f.map0(c))];
        hom_map.insert(
            (a, c),
            HomFunctor {
                obj: hf.obj.iter().map(|&x| hg.obj[x]).collect(),
                mor: hf.mor.iter().map(|&m| hg.mor[m]).collect(),
            },
        );
    }
    let mut compositor = BTreeMap::new();
    for a in 0..b.n_cells0() {
        for c in 0..b.n_cells0() {
            for d in 0..b.n_cells0() {
                let nx = b.hom(c, d).n_objects();
                let ny = b.hom(a, c).n_objects();
                let mut table = vec![vec![0usize; ny]; nx];
                for (xo, row) in table.iter_mut().enumerate() {
                    for (yo, slot) in row.iter_mut().enumerate() {
                        let x = b.one_cell(c, d, xo);
                        let y = b.one_cell(a, c, yo);
                        let inner = g.compositor_at(f.map1(x), f.map1(y))?;
                        let outer = g.map2(f.compositor_at(x, y)?);
                        *slot = vcompose(&g.target, outer, inner)?.mor;
                    }
                }
                compositor.insert((a, c, d), table);
            }
        }
    }
    let mut unit_constraint = Vec::new();
    for a in 0..b.n_cells0() {
        let inner = g.unit_at(f.map0(a));
        let outer = g.map2(f.unit_at(a));
        unit_constraint.push(vcompose(&g.target, outer, inner)?.mor);
    }
    let (unital, strict) = PseudoFunctor::flags_from_tables(
        b,
        &g.target,
        &hom_map,
        &obj_map,
        &compositor,
        &unit_constraint,
    );
    Ok(PseudoFunctor {
        source: Arc::clone(&f.source),
        target: Arc::clone(&g.target),
        obj_map,
        hom_map,
        compositor,
        unit_constraint,
        unital,
        strict,
    })
}

/// Exhaustive check of the pseudofunctor axioms.
pub fn validate_pseudofunctor(f: &PseudoFunctor) -> ValidationReport {
    let mut r = ValidationReport::new();
    let b = &f.source;
    let t = &f.target;
    let n = b.n_cells0();
    if f.obj_map.len() != n || f.obj_map.iter().any(|&a| a >= t.n_cells0()) {
        r.push(AxiomTag::Reference, "object map has wrong length or range");
        return r.finish();
    }
    for a in 0..n {
        for c in 0..n {
            let Some(hm) = f.hom_map.get(&(a, c)) else {
                r.push(AxiomTag::Reference, format!("missing hom map ({a},{c})"));
                return r.finish();
            };
            let hs = b.hom(a, c);
            let ht = t.hom(f.map0(a), f.map0(c));
            if hm.obj.len() != hs.n_objects()
                || hm.mor.len() != hs.n_morphisms()
                || hm.obj.iter().any(|&x| x >= ht.n_objects())
                || hm.mor.iter().any(|&m| m >= ht.n_morphisms())
            {
                r.push(
                    AxiomTag::Reference,
                    format!("hom map ({a},{c}) has wrong shape or range"),
                );
                return r.finish();
            }
        }
    }
    if f.unit_constraint.len() != n {
        r.push(AxiomTag::Reference, "unit constraint has wrong length");
        return r.finish();
    }
    // hom functor: endpoints, identities, composition
    for a in 0..n {
        for c in 0..n {
            let hs = b.hom(a, c);
            let ht = t.hom(f.map0(a), f.map0(c));
            let hm = &f.hom_map[&(a, c)];
            for m in 0..hs.n_morphisms() {
                let im = &ht.morphisms[hm.mor[m]];
                if im.src != hm.obj[hs.morphisms[m].src] || im.tgt != hm.obj[hs.morphisms[m].tgt] {
                    r.push(
                        AxiomTag::Functoriality,
                        format!(
                            "hom functor breaks endpoints at 2-cell {} of hom({},{})",
                            hs.mor_name(m),
                            b.name0(a),
                            b.name0(c)
                        ),
                    );
                }
            }
            for x in 0..hs.n_objects() {
                if hm.mor[hs.id_of(x)] != ht.id_of(hm.obj[x]) {
                    r.push(
                        AxiomTag::Functoriality,
                        format!(
                            "hom functor breaks identity at 1-cell {} of hom({},{})",
                            hs.objects[x],
                            b.name0(a),
                            b.name0(c)
                        ),
                    );
                }
            }
            for m1 in 0..hs.n_morphisms() {
                for m2 in 0..hs.n_morphisms() {
                    if let Some(m12) = hs.comp(m1, m2) {
                        if ht.comp(hm.mor[m1], hm.mor[m2]) != Some(hm.mor[m12]) {
                            r.push(
                                AxiomTag::Functoriality,
                                format!(
                                    "hom functor breaks composition at ({}, {}) of hom({},{})",
                                    hs.mor_name(m1),
                                    hs.mor_name(m2),
                                    b.name0(a),
                                    b.name0(c)
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    // compositor shape and invertibility
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                let Some(table) = f.compositor.get(&(a, c, d)) else {
                    r.push(AxiomTag::Reference, format!("missing compositor ({a},{c},{d})"));
                    return r.finish();
                };
                let nx = b.hom(c, d).n_objects();
                let ny = b.hom(a, c).n_objects();
                let ht = t.hom(f.map0(a), f.map0(d));
                if table.len() != nx || table.iter().any(|row| row.len() != ny) {
                    r.push(
                        AxiomTag::Reference,
                        format!("compositor ({a},{c},{d}) has wrong shape"),
                    );
                    return r.finish();
                }
                for xo in 0..nx {
                    for yo in 0..ny {
                        let m = table[xo][yo];
                        if m >= ht.n_morphisms() {
                            r.push(
                                AxiomTag::Reference,
                                format!("compositor ({a},{c},{d})[{xo}][{yo}] out of range"),
                            );
                            continue;
                        }
                        let x = b.one_cell(c, d, xo);
                        let y = b.one_cell(a, c, yo);
                        let want_src = hcompose(t, f.map1(x), f.map1(y)).map(|w| w.obj);
                        let want_tgt = hcompose(b, x, y).map(|w| f.map1(w).obj);
                        let got = &ht.morphisms[m];
                        if Ok(got.src) != want_src || Ok(got.tgt) != want_tgt {
                            r.push(
                                AxiomTag::Reference,
                                format!(
                                    "compositor at ({}, {}) has wrong endpoints",
                                    b.hom(c, d).objects[xo],
                                    b.hom(a, c).objects[yo]
                                ),
                            );
                        } else if !ht.is_iso(m) {
                            r.push(
                                AxiomTag::NotInvertible,
                                format!(
                                    "compositor at ({}, {}) is not invertible",
                                    b.hom(c, d).objects[xo],
                                    b.hom(a, c).objects[yo]
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    // unit constraint shape and invertibility
    for a in 0..n {
        let ht = t.hom(f.map0(a), f.map0(a));
        let m = f.unit_constraint[a];
        if m >= ht.n_morphisms() {
            r.push(AxiomTag::Reference, format!("unit constraint at {} out of range", b.name0(a)));
            continue;
        }
        let got = &ht.morphisms[m];
        let unit_obj = t.unit1[f.map0(a)];
        let f_unit = f.map1(b.unit(a)).obj;
        if got.src != unit_obj || got.tgt != f_unit {
            r.push(
                AxiomTag::Reference,
                format!("unit constraint at {} has wrong endpoints", b.name0(a)),
            );
        } else if !ht.is_iso(m) {
            r.push(
                AxiomTag::NotInvertible,
                format!("unit constraint at {} is not invertible", b.name0(a)),
            );
        }
    }
    if !r.passed() {
        return r.finish();
    }
    // naturality of the compositor in both arguments
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                let hl = b.hom(c, d);
                let hr = b.hom(a, c);
                for um in 0..hl.n_morphisms() {
                    for vm in 0..hr.n_morphisms() {
                        let u = b.two_cell(c, d, um);
                        let v = b.two_cell(a, c, vm);
                        let x = u.source_1cell();
                        let y = v.source_1cell();
                        let xp = u.target_1cell();
                        let yp = v.target_1cell();
                        // alpha_{x',y'} . (F(u) o F(v)) = F(u o v) . alpha_{x,y}
                        let lhs = vchain(
                            t,
                            &[
                                hcompose2(t, f.map2(u), f.map2(v)).unwrap(),
                                f.compositor_at(xp, yp).unwrap(),
                            ],
                        );
                        let rhs = vchain(
                            t,
                            &[
                                f.compositor_at(x, y).unwrap(),
                                f.map2(hcompose2(b, u, v).unwrap()),
                            ],
                        );
                        if !matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr) {
                            r.push(
                                AxiomTag::CompositorNaturality,
                                format!(
                                    "compositor naturality fails at 2-cells ({}, {})",
                                    hl.mor_name(um),
                                    hr.mor_name(vm)
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    // hexagon coherence
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                for e in 0..n {
                    for xo in 0..b.hom(d, e).n_objects() {
                        for yo in 0..b.hom(c, d).n_objects() {
                            for zo in 0..b.hom(a, c).n_objects() {
                                let x = b.one_cell(d, e, xo);
                                let y = b.one_cell(c, d, yo);
                                let z = b.one_cell(a, c, zo);
                                let xy = hcompose(b, x, y).unwrap();
                                let yz = hcompose(b, y, z).unwrap();
                                let lhs = vchain(
                                    t,
                                    &[
                                        hc2(t, f.compositor_at(x, y).unwrap(), t.id2(f.map1(z)))
                                            .unwrap(),
                                        f.compositor_at(xy, z).unwrap(),
                                    ],
                                );
                                let rhs = vchain(
                                    t,
                                    &[
                                        hc2(t, t.id2(f.map1(x)), f.compositor_at(y, z).unwrap())
                                            .unwrap(),
                                        f.compositor_at(x, yz).unwrap(),
                                    ],
                                );
                                if !matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr) {
                                    r.push(
                                        AxiomTag::CompositorHexagon,
                                        format!(
                                            "compositor hexagon fails at ({}, {}, {})",
                                            b.hom(d, e).objects[xo],
                                            b.hom(c, d).objects[yo],
                                            b.hom(a, c).objects[zo]
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
    // unit triangles
    for a in 0..n {
        for c in 0..n {
            for xo in 0..b.hom(a, c).n_objects() {
                let x = b.one_cell(a, c, xo);
                let fx = f.map1(x);
                let right = vchain(
                    t,
                    &[
                        hc2(t, t.id2(fx), f.unit_at(a)).unwrap(),
                        f.compositor_at(x, b.unit(a)).unwrap(),
                    ],
                );
                let left = vchain(
                    t,
                    &[
                        hc2(t, f.unit_at(c), t.id2(fx)).unwrap(),
                        f.compositor_at(b.unit(c), x).unwrap(),
                    ],
                );
                let idfx = t.id2(fx);
                if !matches!(right, Ok(u) if u == idfx) {
                    r.push(
                        AxiomTag::UnitTriangle,
                        format!("right unit triangle fails at {}", b.hom(a, c).objects[xo]),
                    );
                }
                if !matches!(left, Ok(u) if u == idfx) {
                    r.push(
                        AxiomTag::UnitTriangle,
                        format!("left unit triangle fails at {}", b.hom(a, c).objects[xo]),
                    );
                }
            }
        }
    }
    // declared flags match tables
    let (unital, strict) = f.computed_flags();
    if f.unital != unital {
        r.push(AxiomTag::FlagMismatch, format!("unital flag is {}, tables say {}", f.unital, unital));
    }
    if f.strict != strict {
        r.push(AxiomTag::FlagMismatch, format!("strict flag is {}, tables say {}", f.strict, strict));
    }
    r.finish()
}

/// A pseudonatural transformation between parallel pseudofunctors:
/// 1-cell components `comp0[a]` in `hom(F A, G A)` and naturality 2-cells
/// `comp2[(a,b)][x]: comp0_B . F(x) -> G(x) . comp0_A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoNat {
    pub source: Arc<PseudoFunctor>,
    pub target: Arc<PseudoFunctor>,
    pub comp0: Vec<usize>,
    pub comp2: BTreeMap<(usize, usize), Vec<usize>>,
}

impl PseudoNat {
    pub fn base(&self) -> &Arc<Fin2Cat> {
        &self.source.source
    }

    pub fn ambient(&self) -> &Arc<Fin2Cat> {
        &self.source.target
    }

    pub fn comp0_at(&self, a: usize) -> Cell1Ref {
        Cell1Ref {
            src: self.source.map0(a),
            tgt: self.target.map0(a),
            obj: self.comp0[a],
        }
    }

    pub fn comp2_at(&self, x: Cell1Ref) -> Cell2Ref {
        let mor = self.comp2[&(x.src, x.tgt)][x.obj];
        self.ambient()
            .two_cell(self.source.map0(x.src), self.target.map0(x.tgt), mor)
    }
}

pub fn same_pseudonat(a: &PseudoNat, b: &PseudoNat) -> bool {
    same_functor(&a.source, &b.source)
        && same_functor(&a.target, &b.target)
        && a.comp0 == b.comp0
        && a.comp2 == b.comp2
}

/// The identity pseudonatural transformation of a pseudofunctor.
pub fn identity_pseudonat(f: &Arc<PseudoFunctor>) -> PseudoNat {
    let b = &f.source;
    let t = &f.target;
    let comp0 = (0..b.n_cells0()).map(|a| t.unit1[f.map0(a)]).collect();
    let mut comp2 = BTreeMap::new();
    for a in 0..b.n_cells0() {
        for c in 0..b.n_cells0() {
            let cells: Vec<usize> = (0..b.hom(a, c).n_objects())
                .map(|xo| {
                    let fx = f.map1(b.one_cell(a, c, xo));
                    let left = hcompose(t, t.unit(f.map0(c)), fx).unwrap();
                    t.hom(f.map0(a), f.map0(c)).id_of(left.obj)
                })
                .collect();
            comp2.insert((a, c), cells);
        }
    }
    PseudoNat {
        source: Arc::clone(f),
        target: Arc::clone(f),
        comp0,
        comp2,
    }
}

/// Composite of pseudonats along a common middle functor (`sigma` after `chi`).
pub fn compose_pseudonats(sigma: &PseudoNat, chi: &PseudoNat) -> Result<PseudoNat> {
    if !same_functor(&chi.target, &sigma.source) {
        return Err(Error::ShapeMismatch(
            "pseudonats do not share a middle functor".into(),
        ));
    }
    let t = chi.ambient();
    let b = chi.base();
    let comp0: Vec<usize> = (0..b.n_cells0())
        .map(|a| hcompose(t, sigma.comp0_at(a), chi.comp0_at(a)).map(|c| c.obj))
        .collect::<Result<_>>()?;
    let mut comp2 = BTreeMap::new();
    for a in 0..b.n_cells0() {
        for c in 0..b.n_cells0() {
            let mut cells = Vec::new();
            for xo in 0..b.hom(a, c).n_objects() {
                let x = b.one_cell(a, c, xo);
                let first = hc2(t, t.id2(sigma.comp0_at(c)), chi.comp2_at(x))?;
                let second = hc2(t, sigma.comp2_at(x), t.id2(chi.comp0_at(a)))?;
                cells.push(vchain(t, &[first, second])?.mor);
            }
            comp2.insert((a, c), cells);
        }
    }
    Ok(PseudoNat {
        source: Arc::clone(&chi.source),
        target: Arc::clone(&sigma.target),
        comp0,
        comp2,
    })
}

/// Exhaustive check of the pseudonaturality axioms.
pub fn validate_pseudonat(chi: &PseudoNat) -> ValidationReport {
    let mut r = ValidationReport::new();
    let f = &chi.source;
    let g = &chi.target;
    if !(Arc::ptr_eq(&f.source, &g.source) || f.source == g.source)
        || !(Arc::ptr_eq(&f.target, &g.target) || f.target == g.target)
    {
        r.push(AxiomTag::Reference, "component functors are not parallel");
        return r.finish();
    }
    let b = &f.source;
    let t = &f.target;
    let n = b.n_cells0();
    if chi.comp0.len() != n {
        r.push(AxiomTag::Reference, "comp0 has wrong length");
        return r.finish();
    }
    for a in 0..n {
        if chi.comp0[a] >= t.hom(f.map0(a), g.map0(a)).n_objects() {
            r.push(AxiomTag::Reference, format!("comp0[{}] out of range", b.name0(a)));
            return r.finish();
        }
    }
    for a in 0..n {
        for c in 0..n {
            let Some(cells) = chi.comp2.get(&(a, c)) else {
                r.push(AxiomTag::Reference, format!("missing comp2 ({a},{c})"));
                return r.finish();
            };
            if cells.len() != b.hom(a, c).n_objects() {
                r.push(AxiomTag::Reference, format!("comp2 ({a},{c}) has wrong length"));
                return r.finish();
            }
            let ht = t.hom(f.map0(a), g.map0(c));
            for (xo, &m) in cells.iter().enumerate() {
                if m >= ht.n_morphisms() {
                    r.push(
                        AxiomTag::Reference,
                        format!("comp2 at {} out of range", b.hom(a, c).objects[xo]),
                    );
                    continue;
                }
                let x = b.one_cell(a, c, xo);
                let want_src = hcompose(t, chi.comp0_at(c), f.map1(x)).map(|w| w.obj);
                let want_tgt = hcompose(t, g.map1(x), chi.comp0_at(a)).map(|w| w.obj);
                let got = &ht.morphisms[m];
                if Ok(got.src) != want_src || Ok(got.tgt) != want_tgt {
                    r.push(
                        AxiomTag::Reference,
                        format!("comp2 at {} has wrong endpoints", b.hom(a, c).objects[xo]),
                    );
                } else if !ht.is_iso(m) {
                    r.push(
                        AxiomTag::NotInvertible,
                        format!("comp2 at {} is not invertible", b.hom(a, c).objects[xo]),
                    );
                }
            }
        }
    }
    if !r.passed() {
        return r.finish();
    }
    // naturality in x: for every 2-cell u: x -> y
    for a in 0..n {
        for c in 0..n {
            for um in 0..b.hom(a, c).n_morphisms() {
                let u = b.two_cell(a, c, um);
                let x = u.source_1cell();
                let y = u.target_1cell();
                let lhs = vchain(
                    t,
                    &[
                        chi.comp2_at(x),
                        hc2(t, g.map2(u), t.id2(chi.comp0_at(a))).unwrap(),
                    ],
                );
                let rhs = vchain(
                    t,
                    &[
                        hc2(t, t.id2(chi.comp0_at(c)), f.map2(u)).unwrap(),
                        chi.comp2_at(y),
                    ],
                );
                if !matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr) {
                    r.push(
                        AxiomTag::Naturality,
                        format!("naturality fails at 2-cell {}", b.hom(a, c).mor_name(um)),
                    );
                }
            }
        }
    }
    // unit axiom
    for a in 0..n {
        let i = b.unit(a);
        let lhs = chi.comp2_at(i);
        let phi_f_inv = invert_2cell(t, f.unit_at(a));
        let rhs = phi_f_inv.and_then(|pf| {
            vchain(
                t,
                &[
                    hc2(t, t.id2(chi.comp0_at(a)), pf).ok()?,
                    hc2(t, g.unit_at(a), t.id2(chi.comp0_at(a))).ok()?,
                ],
            )
            .ok()
        });
        if rhs != Some(lhs) {
            r.push(
                AxiomTag::PseudonatUnit,
                format!("unit axiom fails at 0-cell {}", b.name0(a)),
            );
        }
    }
    // compatibility with composition of 1-cells
    for a in 0..n {
        for c in 0..n {
            for d in 0..n {
                for xo in 0..b.hom(c, d).n_objects() {
                    for yo in 0..b.hom(a, c).n_objects() {
                        let x = b.one_cell(c, d, xo);
                        let y = b.one_cell(a, c, yo);
                        let xy = hcompose(b, x, y).unwrap();
                        let lhs = vchain(
                            t,
                            &[
                                hc2(t, t.id2(chi.comp0_at(d)), f.compositor_at(x, y).unwrap())
                                    .unwrap(),
                                chi.comp2_at(xy),
                            ],
                        );
                        let rhs = vchain(
                            t,
                            &[
                                hc2(t, chi.comp2_at(x), t.id2(f.map1(y))).unwrap(),
                                hc2(t, t.id2(g.map1(x)), chi.comp2_at(y)).unwrap(),
                                hc2(
                                    t,
                                    g.compositor_at(x, y).unwrap(),
                                    t.id2(chi.comp0_at(a)),
                                )
                                .unwrap(),
                            ],
                        );
                        if !matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr) {
                            r.push(
                                AxiomTag::PseudonatComposition,
                                format!(
                                    "composition axiom fails at ({}, {})",
                                    b.hom(c, d).objects[xo],
                                    b.hom(a, c).objects[yo]
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    r.finish()
}

/// A modification between parallel pseudonats: one 2-cell per 0-cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    pub source: Arc<PseudoNat>,
    pub target: Arc<PseudoNat>,
    pub comp: Vec<usize>,
}

impl Modification {
    pub fn comp_at(&self, a: usize) -> Cell2Ref {
        self.source.ambient().two_cell(
            self.source.source.map0(a),
            self.source.target.map0(a),
            self.comp[a],
        )
    }
}

pub fn identity_modification(chi: &Arc<PseudoNat>) -> Modification {
    let t = chi.ambient();
    let comp = (0..chi.base().n_cells0())
        .map(|a| t.id2(chi.comp0_at(a)).mor)
        .collect();
    Modification {
        source: Arc::clone(chi),
        target: Arc::clone(chi),
        comp,
    }
}

/// Vertical composite of modifications (`m2` after `m1`).
pub fn compose_modifications(m2: &Modification, m1: &Modification) -> Result<Modification> {
    if !same_pseudonat(&m1.target, &m2.source) {
        return Err(Error::ShapeMismatch("modifications not composable".into()));
    }
    let t = m1.source.ambient();
    let comp = (0..m1.source.base().n_cells0())
        .map(|a| vcompose(t, m2.comp_at(a), m1.comp_at(a)).map(|c| c.mor))
        .collect::<Result<_>>()?;
    Ok(Modification {
        source: Arc::clone(&m1.source),
        target: Arc::clone(&m2.target),
        comp,
    })
}

/// Horizontal composite of modifications along pseudonat composition:
/// `m: V => V'` and `m': W => W'` give `V . W => V' . W'`.
pub fn hcompose_modifications(m: &Modification, mp: &Modification) -> Result<Modification> {
    if !same_functor(&mp.source.target, &m.source.source) {
        return Err(Error::ShapeMismatch(
            "modifications not horizontally composable".into(),
        ));
    }
    let t = m.source.ambient();
    let comp = (0..m.source.base().n_cells0())
        .map(|a| hcompose2(t, m.comp_at(a), mp.comp_at(a)).map(|c| c.mor))
        .collect::<Result<_>>()?;
    Ok(Modification {
        source: Arc::new(compose_pseudonats(&m.source, &mp.source)?),
        target: Arc::new(compose_pseudonats(&m.target, &mp.target)?),
        comp,
    })
}

/// Inverts every component; fails if one is not invertible.
pub fn invert_modification(m: &Modification) -> Result<Modification> {
    let t = m.source.ambient();
    let comp = (0..m.source.base().n_cells0())
        .map(|a| {
            invert_2cell(t, m.comp_at(a))
                .map(|c| c.mor)
                .ok_or_else(|| Error::ShapeMismatch("component not invertible".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Modification {
        source: Arc::clone(&m.target),
        target: Arc::clone(&m.source),
        comp,
    })
}

/// Whisker on the left by a pseudonat: `1_sigma . m : sigma.chi => sigma.theta`.
pub fn whisker_mod_left(sigma: &Arc<PseudoNat>, m: &Modification) -> Result<Modification> {
    hcompose_modifications(&identity_modification(sigma), m)
}

/// Whisker on the right by a pseudonat: `m . 1_rho : chi.rho => theta.rho`.
pub fn whisker_mod_right(m: &Modification, rho: &Arc<PseudoNat>) -> Result<Modification> {
    hcompose_modifications(m, &identity_modification(rho))
}

/// Exhaustive check of the modification axiom.
pub fn validate_modification(m: &Modification) -> ValidationReport {
    let mut r = ValidationReport::new();
    let chi = &m.source;
    let theta = &m.target;
    if !same_functor(&chi.source, &theta.source) || !same_functor(&chi.target, &theta.target) {
        r.push(AxiomTag::Reference, "modification endpoints are not parallel pseudonats");
        return r.finish();
    }
    let b = chi.base();
    let t = chi.ambient();
    let n = b.n_cells0();
    if m.comp.len() != n {
        r.push(AxiomTag::Reference, "modification has wrong number of components");
        return r.finish();
    }
    for a in 0..n {
        let ht = t.hom(chi.source.map0(a), chi.target.map0(a));
        if m.comp[a] >= ht.n_morphisms() {
            r.push(AxiomTag::Reference, format!("component at {} out of range", b.name0(a)));
            return r.finish();
        }
        let got = &ht.morphisms[m.comp[a]];
        if got.src != chi.comp0[a] || got.tgt != theta.comp0[a] {
            r.push(
                AxiomTag::Reference,
                format!("component at {} has wrong endpoints", b.name0(a)),
            );
        }
    }
    if !r.passed() {
        return r.finish();
    }
    for a in 0..n {
        for c in 0..n {
            for xo in 0..b.hom(a, c).n_objects() {
                let x = b.one_cell(a, c, xo);
                let g = &chi.target;
                let f = &chi.source;
                let lhs = vchain(
                    t,
                    &[
                        chi.comp2_at(x),
                        hc2(t, t.id2(g.map1(x)), m.comp_at(a)).unwrap(),
                    ],
                );
                let rhs = vchain(
                    t,
                    &[
                        hc2(t, m.comp_at(c), t.id2(f.map1(x))).unwrap(),
                        theta.comp2_at(x),
                    ],
                );
                if !matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr) {
                    r.push(
                        AxiomTag::ModificationSquare,
                        format!(
                            "modification square fails at 1-cell {} of hom({},{})",
                            b.hom(a, c).objects[xo],
                            b.name0(a),
                            b.name0(c)
                        ),
                    );
                }
            }
        }
    }
    r.finish()
}

/// Tensor product of pseudonatural transformations:
/// `beta: G -> G'` over the outer pair and `alpha: F -> F'` over the inner
/// pair give `beta (x) alpha : G.F -> G'.F'` with
/// `(beta (x) alpha)_A = beta_{F'(A)} . G(alpha_A)`.
pub fn tensor_pseudonat(beta: &PseudoNat, alpha: &PseudoNat) -> Result<PseudoNat> {
    let g = &beta.source;
    let gp = &beta.target;
    let f = &alpha.source;
    let fp = &alpha.target;
    if !(Arc::ptr_eq(&f.target, &g.source) || f.target == g.source) {
        return Err(Error::ShapeMismatch(
            "inner pseudonat does not land in the outer source 2-category".into(),
        ));
    }
    let b = alpha.base();
    let t = beta.ambient();
    let gf = Arc::new(compose_pseudofunctors(g, f)?);
    let gpfp = Arc::new(compose_pseudofunctors(gp, fp)?);
    let comp0: Vec<usize> = (0..b.n_cells0())
        .map(|a| {
            hcompose(t, beta.comp0_at(fp.map0(a)), g.map1(alpha.comp0_at(a))).map(|c| c.obj)
        })
        .collect::<Result<_>>()?;
    let mut comp2 = BTreeMap::new();
    for a in 0..b.n_cells0() {
        for c in 0..b.n_cells0() {
            let mut cells = Vec::new();
            for xo in 0..b.hom(a, c).n_objects() {
                let x = b.one_cell(a, c, xo);
                let fx = f.map1(x);
                let fpx = fp.map1(x);
                let a0 = alpha.comp0_at(a);
                let c0 = alpha.comp0_at(c);
                // beta^0_{F'(c)} . [G(alpha^0_c) . GF(x) -> G(alpha^0_c . F x) ->
                //   G(F'(x) . alpha^0_a) -> GF'(x) . G(alpha^0_a)], then
                // beta_{F'(x)} . id_{G(alpha^0_a)}
                let s1 = hc2(
                    t,
                    t.id2(beta.comp0_at(fp.map0(c))),
                    g.compositor_at(c0, fx)?,
                )?;
                let s2 = hc2(
                    t,
                    t.id2(beta.comp0_at(fp.map0(c))),
                    g.map2(alpha.comp2_at(x)),
                )?;
                let unfold = invert_2cell(t, g.compositor_at(fpx, a0)?)
                    .ok_or_else(|| Error::ShapeMismatch("compositor not invertible".into()))?;
                let s3 = hc2(t, t.id2(beta.comp0_at(fp.map0(c))), unfold)?;
                let s4 = hc2(t, beta.comp2_at(fpx), t.id2(g.map1(a0)))?;
                cells.push(vchain(t, &[s1, s2, s3, s4])?.mor);
            }
            comp2.insert((a, c), cells);
        }
    }
    Ok(PseudoNat {
        source: gf,
        target: gpfp,
        comp0,
        comp2,
    })
}

/// Tensor product of modifications:
/// `(omega (x) omega')_A = omega_{F'(A)} . G(omega'_A)`.
pub fn tensor_modifications(omega: &Modification, omega_p: &Modification) -> Result<Modification> {
    let beta = &omega.source;
    let alpha = &omega_p.source;
    let g = &beta.source;
    let fp = &alpha.target;
    if !(Arc::ptr_eq(&alpha.source.target, &g.source) || alpha.source.target == g.source) {
        return Err(Error::ShapeMismatch(
            "modifications are not tensor-composable".into(),
        ));
    }
    let b = alpha.base();
    let t = beta.ambient();
    let comp = (0..b.n_cells0())
        .map(|a| {
            hcompose2(
                t,
                omega.comp_at(fp.map0(a)),
                g.map2(omega_p.comp_at(a)),
            )
            .map(|c| c.mor)
        })
        .collect::<Result<_>>()?;
    Ok(Modification {
        source: Arc::new(tensor_pseudonat(&omega.source, &omega_p.source)?),
        target: Arc::new(tensor_pseudonat(&omega.target, &omega_p.target)?),
        comp,
    })
}

/// The comparison constraint `c_{alpha,beta}` filling the square of the four
/// tensor composites, with components `alpha_{beta_A}^{-1}`. The outer
/// functors must be unital.
pub fn comparison_constraint(alpha: &PseudoNat, beta: &PseudoNat) -> Result<Modification> {
    let f = &alpha.source;
    let fp = &alpha.target;
    let h = &beta.source;
    let hp = &beta.target;
    if !(Arc::ptr_eq(&h.target, &f.source) || h.target == f.source) {
        return Err(Error::ShapeMismatch(
            "comparison constraint needs composable pseudonats".into(),
        ));
    }
    if !f.unital || !fp.unital {
        return Err(Error::NotUnital(
            "comparison constraint needs unital outer functors".into(),
        ));
    }
    let b = beta.base();
    let t = alpha.ambient();
    let id_fp = Arc::new(identity_pseudonat(fp));
    let id_f = Arc::new(identity_pseudonat(f));
    let id_h = Arc::new(identity_pseudonat(h));
    let id_hp = Arc::new(identity_pseudonat(hp));
    let source = compose_pseudonats(&tensor_pseudonat(&id_fp, beta)?, &tensor_pseudonat(alpha, &id_h)?)?;
    let target = compose_pseudonats(&tensor_pseudonat(alpha, &id_hp)?, &tensor_pseudonat(&id_f, beta)?)?;
    let comp = (0..b.n_cells0())
        .map(|a| {
            invert_2cell(t, alpha.comp2_at(beta.comp0_at(a)))
                .map(|c| c.mor)
                .ok_or_else(|| Error::ShapeMismatch("naturality 2-cell not invertible".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Modification {
        source: Arc::new(source),
        target: Arc::new(target),
        comp,
    })
}

/// The associativity constraint
/// `a_{alpha,beta,gamma}: (alpha (x) beta) (x) gamma -> alpha (x) (beta (x) gamma)`
/// with components `id . K_2(beta_{G'(A)}, H(gamma_A))` for `alpha: K -> K'`.
pub fn associativity_constraint(
    alpha: &PseudoNat,
    beta: &PseudoNat,
    gamma: &PseudoNat,
) -> Result<Modification> {
    let k = &alpha.source;
    let h = &beta.source;
    let hp = &beta.target;
    let gp = &gamma.target;
    if !(Arc::ptr_eq(&gamma.source.target, &h.source) || gamma.source.target == h.source)
        || !(Arc::ptr_eq(&h.target, &k.source) || h.target == k.source)
    {
        return Err(Error::ShapeMismatch(
            "associativity constraint needs three composable pseudonats".into(),
        ));
    }
    let b = gamma.base();
    let t = alpha.ambient();
    let source = tensor_pseudonat(&tensor_pseudonat(alpha, beta)?, gamma)?;
    let target = tensor_pseudonat(alpha, &tensor_pseudonat(beta, gamma)?)?;
    let comp = (0..b.n_cells0())
        .map(|a| {
            let ba = beta.comp0_at(gp.map0(a));
            let hga = h.map1(gamma.comp0_at(a));
            let fold = k.compositor_at(ba, hga)?;
            hc2(
                t,
                t.id2(alpha.comp0_at(hp.map0(gp.map0(a)))),
                fold,
            )
            .map(|c| c.mor)
        })
        .collect::<Result<_>>()?;
    Ok(Modification {
        source: Arc::new(source),
        target: Arc::new(target),
        comp,
    })
}

/// Checks the pentagon identity for the associativity constraint on four
/// composable pseudonats (`alpha` outermost).
pub fn pentagon_holds(
    alpha: &PseudoNat,
    beta: &PseudoNat,
    gamma: &PseudoNat,
    delta: &PseudoNat,
) -> Result<bool> {
    let a_bc = associativity_constraint(alpha, beta, gamma)?;
    let bc_d = associativity_constraint(beta, gamma, delta)?;
    let ab_cd = associativity_constraint(alpha, &tensor_pseudonat(beta, gamma)?, delta)?;
    let route1_first = tensor_modifications(&a_bc, &identity_modification(&Arc::new(delta.clone())))?;
    let route1_third = tensor_modifications(&identity_modification(&Arc::new(alpha.clone())), &bc_d)?;
    let lhs = compose_modifications(
        &route1_third,
        &compose_modifications(&ab_cd, &route1_first)?,
    )?;
    let a_cd = associativity_constraint(alpha, beta, &tensor_pseudonat(gamma, delta)?)?;
    let ab_c = associativity_constraint(&tensor_pseudonat(alpha, beta)?, gamma, delta)?;
    let rhs = compose_modifications(&a_cd, &ab_c)?;
    if !same_pseudonat(&lhs.source, &rhs.source) || !same_pseudonat(&lhs.target, &rhs.target) {
        return Err(Error::ShapeMismatch(
            "pentagon sides have different boundaries".into(),
        ));
    }
    Ok(lhs.comp == rhs.comp)
}

/// The category `Pseu-Nat(F, G)`: objects are all valid pseudonatural
/// transformations found by exhaustive search, morphisms all modifications.
#[derive(Debug, Clone)]
pub struct PseudoNatCategory {
    pub cat: FinCat,
    pub objects: Vec<Arc<PseudoNat>>,
    /// Aligned with `cat.morphisms`.
    pub morphisms: Vec<Modification>,
}

impl PseudoNatCategory {
    pub fn find_object(&self, chi: &PseudoNat) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.comp0 == chi.comp0 && o.comp2 == chi.comp2)
    }

    pub fn find_morphism(&self, src: usize, tgt: usize, comp: &[usize]) -> Option<usize> {
        (0..self.morphisms.len()).find(|&k| {
            self.cat.morphisms[k].src == src
                && self.cat.morphisms[k].tgt == tgt
                && self.morphisms[k].comp == comp
        })
    }
}

fn enumerate_assignments(
    domains: &[Vec<usize>],
    check_prefix: &mut dyn FnMut(&[usize]) -> bool,
    budget: &mut Budget,
) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut prefix: Vec<usize> = Vec::with_capacity(domains.len());
    fn rec(
        domains: &[Vec<usize>],
        k: usize,
        prefix: &mut Vec<usize>,
        check_prefix: &mut dyn FnMut(&[usize]) -> bool,
        budget: &mut Budget,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if k == domains.len() {
            out.push(prefix.clone());
            return Ok(());
        }
        for &cand in &domains[k] {
            budget.tick()?;
            prefix.push(cand);
            if check_prefix(prefix) {
                rec(domains, k + 1, prefix, check_prefix, budget, out)?;
            }
            prefix.pop();
        }
        Ok(())
    }
    if domains.is_empty() {
        out.push(Vec::new());
        return Ok(out);
    }
    rec(domains, 0, &mut prefix, check_prefix, budget, &mut out)?;
    Ok(out)
}

/// Enumerates `Pseu-Nat(F, G)` by backtracking over component choices,
/// pruning with the pseudonaturality axioms as soon as their participants
/// are assigned.
pub fn pseudonat_category(
    f: &Arc<PseudoFunctor>,
    g: &Arc<PseudoFunctor>,
    caps: SearchCaps,
) -> Result<PseudoNatCategory> {
    if !(Arc::ptr_eq(&f.source, &g.source) || f.source == g.source)
        || !(Arc::ptr_eq(&f.target, &g.target) || f.target == g.target)
    {
        return Err(Error::SourceTargetMismatch("functors are not parallel".into()));
    }
    let b = &f.source;
    let t = &f.target;
    let n0 = b.n_cells0();
    let one_cells = b.all_1cells();
    let mut budget = Budget::new(caps);

    // slots: comp0 per 0-cell, then comp2 per 1-cell (in canonical order)
    let mut domains: Vec<Vec<usize>> = Vec::new();
    for a in 0..n0 {
        domains.push((0..t.hom(f.map0(a), g.map0(a)).n_objects()).collect());
    }
    for x in &one_cells {
        domains.push((0..t.hom(f.map0(x.src), g.map0(x.tgt)).n_morphisms()).collect());
    }

    let slot_of = |x: &Cell1Ref| n0 + one_cells.iter().position(|y| y == x).unwrap();
    let build = |assign: &[usize]| -> PseudoNat {
        let comp0 = assign[..n0].to_vec();
        let mut comp2: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for a in 0..n0 {
            for c in 0..n0 {
                comp2.insert((a, c), vec![0; b.hom(a, c).n_objects()]);
            }
        }
        for (i, x) in one_cells.iter().enumerate() {
            comp2.get_mut(&(x.src, x.tgt)).unwrap()[x.obj] = assign[n0 + i];
        }
        PseudoNat {
            source: Arc::clone(f),
            target: Arc::clone(g),
            comp0,
            comp2,
        }
    };

    // instance lists keyed by the latest slot they touch
    enum Inst {
        Shape(usize),                 // 1-cell slot: endpoint + iso check
        Unit(usize),                  // 0-cell a, at slot of I_a
        Nat(Cell2Ref),                // naturality at a source 2-cell
        Comp(Cell1Ref, Cell1Ref),     // composition axiom at (x, y)
    }
    let mut by_slot: Vec<Vec<Inst>> = vec![Vec::new(); domains.len()];
    for (i, x) in one_cells.iter().enumerate() {
        by_slot[n0 + i].push(Inst::Shape(i));
    }
    for a in 0..n0 {
        by_slot[slot_of(&b.unit(a))].push(Inst::Unit(a));
    }
    for u in b.all_2cells() {
        let s = slot_of(&u.source_1cell()).max(slot_of(&u.target_1cell()));
        by_slot[s].push(Inst::Nat(u));
    }
    for x in &one_cells {
        for y in &one_cells {
            if y.tgt != x.src {
                continue;
            }
            let xy = hcompose(b, *x, *y).unwrap();
            let s = slot_of(x).max(slot_of(y)).max(slot_of(&xy));
            by_slot[s].push(Inst::Comp(*x, *y));
        }
    }

    let comp0_of = |assign: &[usize], a: usize| Cell1Ref {
        src: f.map0(a),
        tgt: g.map0(a),
        obj: assign[a],
    };
    let comp2_of = |assign: &[usize], x: &Cell1Ref| {
        let i = slot_of(x);
        t.two_cell(f.map0(x.src), g.map0(x.tgt), assign[i])
    };

    let mut check = |assign: &[usize]| -> bool {
        let k = assign.len() - 1;
        for inst in &by_slot[k] {
            let ok = match inst {
                Inst::Shape(i) => {
                    let x = &one_cells[*i];
                    let ht = t.hom(f.map0(x.src), g.map0(x.tgt));
                    let m = assign[n0 + i];
                    let want_src = hcompose(t, comp0_of(assign, x.tgt), f.map1(*x)).unwrap().obj;
                    let want_tgt = hcompose(t, g.map1(*x), comp0_of(assign, x.src)).unwrap().obj;
                    ht.morphisms[m].src == want_src
                        && ht.morphisms[m].tgt == want_tgt
                        && ht.is_iso(m)
                }
                Inst::Unit(a) => {
                    let i = b.unit(*a);
                    let lhs = comp2_of(assign, &i);
                    invert_2cell(t, f.unit_at(*a))
                        .and_then(|pf| {
                            let c0 = t.id2(comp0_of(assign, *a));
                            let s1 = hc2(t, c0, pf).ok()?;
                            let s2 = hc2(t, g.unit_at(*a), c0).ok()?;
                            vchain(t, &[s1, s2]).ok()
                        })
                        .map(|rhs| rhs == lhs)
                        .unwrap_or(false)
                }
                Inst::Nat(u) => {
                    let x = u.source_1cell();
                    let y = u.target_1cell();
                    let lhs = vchain(
                        t,
                        &[
                            comp2_of(assign, &x),
                            hc2(t, g.map2(*u), t.id2(comp0_of(assign, u.src))).unwrap(),
                        ],
                    );
                    let rhs = vchain(
                        t,
                        &[
                            hc2(t, t.id2(comp0_of(assign, u.tgt)), f.map2(*u)).unwrap(),
                            comp2_of(assign, &y),
                        ],
                    );
                    matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr)
                }
                Inst::Comp(x, y) => {
                    let xy = hcompose(b, *x, *y).unwrap();
                    let lhs = vchain(
                        t,
                        &[
                            hc2(
                                t,
                                t.id2(comp0_of(assign, x.tgt)),
                                f.compositor_at(*x, *y).unwrap(),
                            )
                            .unwrap(),
                            comp2_of(assign, &xy),
                        ],
                    );
                    let rhs = vchain(
                        t,
                        &[
                            hc2(t, comp2_of(assign, x), t.id2(f.map1(*y))).unwrap(),
                            hc2(t, t.id2(g.map1(*x)), comp2_of(assign, y)).unwrap(),
                            hc2(
                                t,
                                g.compositor_at(*x, *y).unwrap(),
                                t.id2(comp0_of(assign, y.src)),
                            )
                            .unwrap(),
                        ],
                    );
                    matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr)
                }
            };
            if !ok {
                return false;
            }
        }
        true
    };

    let mut assignments = enumerate_assignments(&domains, &mut check, &mut budget)?;
    assignments.sort();
    let objects: Vec<Arc<PseudoNat>> = assignments.iter().map(|a| Arc::new(build(a))).collect();

    // modifications between every ordered pair
    let mut morphisms = Vec::new();
    let mut mor_data = Vec::new();
    for (i, chi) in objects.iter().enumerate() {
        for (j, theta) in objects.iter().enumerate() {
            let mut mod_domains: Vec<Vec<usize>> = Vec::new();
            for a in 0..n0 {
                let ht = t.hom(f.map0(a), g.map0(a));
                mod_domains.push(
                    (0..ht.n_morphisms())
                        .filter(|&m| {
                            ht.morphisms[m].src == chi.comp0[a] && ht.morphisms[m].tgt == theta.comp0[a]
                        })
                        .collect(),
                );
            }
            // square instances ready once both endpoint components exist
            let mut square_by_slot: Vec<Vec<Cell1Ref>> = vec![Vec::new(); n0];
            for x in &one_cells {
                square_by_slot[x.src.max(x.tgt)].push(*x);
            }
            let mut check_mod = |assign: &[usize]| -> bool {
                let k = assign.len() - 1;
                for x in &square_by_slot[k] {
                    let lhs = vchain(
                        t,
                        &[
                            chi.comp2_at(*x),
                            hc2(
                                t,
                                t.id2(g.map1(*x)),
                                t.two_cell(f.map0(x.src), g.map0(x.src), assign[x.src]),
                            )
                            .unwrap(),
                        ],
                    );
                    let rhs = vchain(
                        t,
                        &[
                            hc2(
                                t,
                                t.two_cell(f.map0(x.tgt), g.map0(x.tgt), assign[x.tgt]),
                                t.id2(f.map1(*x)),
                            )
                            .unwrap(),
                            theta.comp2_at(*x),
                        ],
                    );
                    if !matches!((lhs, rhs), (Ok(l), Ok(rr)) if l == rr) {
                        return false;
                    }
                }
                true
            };
            let found = enumerate_assignments(&mod_domains, &mut check_mod, &mut budget)?;
            for comp in found {
                morphisms.push(Modification {
                    source: Arc::clone(chi),
                    target: Arc::clone(theta),
                    comp,
                });
                mor_data.push((i, j));
            }
        }
    }

    // assemble the finite category
    let cat_objects: Vec<String> = (0..objects.len()).map(|i| format!("pn{i}")).collect();
    let cat_mor: Vec<Mor> = mor_data
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| Mor {
            src: i,
            tgt: j,
            name: format!("mod{k}"),
        })
        .collect();
    let identity: Vec<usize> = (0..objects.len())
        .map(|i| {
            let idm = identity_modification(&objects[i]);
            morphisms
                .iter()
                .zip(&mor_data)
                .position(|(m, &(s, tt))| s == i && tt == i && m.comp == idm.comp)
                .expect("identity modification found by the enumeration")
        })
        .collect();
    let nm = morphisms.len();
    let mut compose = vec![vec![None; nm]; nm];
    for (k2, &(i2, j2)) in mor_data.iter().enumerate() {
        for (k1, &(i1, j1)) in mor_data.iter().enumerate() {
            if j1 != i2 {
                continue;
            }
            let composed = compose_modifications(&morphisms[k2], &morphisms[k1])
                .expect("componentwise composite of modifications");
            let idx = morphisms
                .iter()
                .zip(&mor_data)
                .position(|(m, &(s, tt))| s == i1 && tt == j2 && m.comp == composed.comp)
                .expect("composite modification found by the enumeration");
            compose[k2][k1] = Some(idx);
        }
    }
    Ok(PseudoNatCategory {
        cat: FinCat {
            objects: cat_objects,
            morphisms: cat_mor,
            compose,
            identity,
        },
        objects,
        morphisms,
    })
}

/// A strict monoidal category: a finite category with total tensor tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalCat {
    pub cat: FinCat,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: Vec<Vec<usize>>,
    pub unit: usize,
}

impl MonoidalCat {
    pub fn n_objects(&self) -> usize {
        self.cat.n_objects()
    }
}

/// Checks strict associativity, unitality and functoriality of the tensor.
pub fn validate_monoidal(m: &MonoidalCat) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.absorb(m.cat.validate("underlying"));
    let no = m.cat.n_objects();
    let nm = m.cat.n_morphisms();
    if m.tensor_obj.len() != no
        || m.tensor_obj.iter().any(|row| row.len() != no)
        || m.tensor_mor.len() != nm
        || m.tensor_mor.iter().any(|row| row.len() != nm)
        || m.unit >= no
    {
        r.push(AxiomTag::Reference, "tensor tables have wrong shape");
        return r.finish();
    }
    if m.tensor_obj.iter().flatten().any(|&x| x >= no)
        || m.tensor_mor.iter().flatten().any(|&x| x >= nm)
    {
        r.push(AxiomTag::Reference, "tensor tables out of range");
        return r.finish();
    }
    for x in 0..no {
        if m.tensor_obj[m.unit][x] != x || m.tensor_obj[x][m.unit] != x {
            r.push(
                AxiomTag::Monoidality,
                format!("unit law fails at object {}", m.cat.objects[x]),
            );
        }
        for y in 0..no {
            for z in 0..no {
                if m.tensor_obj[m.tensor_obj[x][y]][z] != m.tensor_obj[x][m.tensor_obj[y][z]] {
                    r.push(
                        AxiomTag::Monoidality,
                        format!(
                            "tensor associativity fails at ({}, {}, {})",
                            m.cat.objects[x], m.cat.objects[y], m.cat.objects[z]
                        ),
                    );
                }
            }
        }
    }
    let idu = m.cat.id_of(m.unit);
    for f in 0..nm {
        if m.tensor_mor[idu][f] != f || m.tensor_mor[f][idu] != f {
            r.push(
                AxiomTag::Monoidality,
                format!("morphism unit law fails at {}", m.cat.mor_name(f)),
            );
        }
    }
    for f in 0..nm {
        for g in 0..nm {
            let fg = m.tensor_mor[f][g];
            let (mf, mg, mfg) = (&m.cat.morphisms[f], &m.cat.morphisms[g], &m.cat.morphisms[fg]);
            if mfg.src != m.tensor_obj[mf.src][mg.src] || mfg.tgt != m.tensor_obj[mf.tgt][mg.tgt] {
                r.push(
                    AxiomTag::Monoidality,
                    format!(
                        "tensor of morphisms has wrong endpoints at ({}, {})",
                        m.cat.mor_name(f),
                        m.cat.mor_name(g)
                    ),
                );
            }
            for fp in 0..nm {
                for gp in 0..nm {
                    let left = m.cat.comp(fp, f).zip(m.cat.comp(gp, g));
                    if let Some((cf, cg)) = left {
                        let lhs = m.tensor_mor[cf][cg];
                        let rhs = m.cat.comp(m.tensor_mor[fp][gp], m.tensor_mor[f][g]);
                        if rhs != Some(lhs) {
                            r.push(
                                AxiomTag::Monoidality,
                                format!(
                                    "tensor is not functorial at ({}, {}, {}, {})",
                                    m.cat.mor_name(fp),
                                    m.cat.mor_name(f),
                                    m.cat.mor_name(gp),
                                    m.cat.mor_name(g)
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    for x in 0..no {
        for y in 0..no {
            if m.tensor_mor[m.cat.id_of(x)][m.cat.id_of(y)] != m.cat.id_of(m.tensor_obj[x][y]) {
                r.push(
                    AxiomTag::Monoidality,
                    format!(
                        "tensor does not preserve identities at ({}, {})",
                        m.cat.objects[x], m.cat.objects[y]
                    ),
                );
            }
        }
    }
    // morphism-level strict associativity
    for f in 0..nm {
        for g in 0..nm {
            for h in 0..nm {
                if m.tensor_mor[m.tensor_mor[f][g]][h] != m.tensor_mor[f][m.tensor_mor[g][h]] {
                    r.push(
                        AxiomTag::Monoidality,
                        format!(
                            "morphism tensor associativity fails at ({}, {}, {})",
                            m.cat.mor_name(f),
                            m.cat.mor_name(g),
                            m.cat.mor_name(h)
                        ),
                    );
                }
            }
        }
    }
    r.finish()
}

/// The relative center `Z(H)` of a unital pseudofunctor: the monoidal
/// category of pseudonatural endotransformations of `H`, tensored by
/// composition `(V (x) W)_A = V_A . W_A`.
#[derive(Debug, Clone)]
pub struct RelativeCenter {
    pub monoidal: MonoidalCat,
    pub objects: Vec<Arc<PseudoNat>>,
    pub morphisms: Vec<Modification>,
}

pub fn relative_center(h: &Arc<PseudoFunctor>, caps: SearchCaps) -> Result<RelativeCenter> {
    if !h.unital {
        return Err(Error::NotUnital("relative center needs a unital pseudofunctor".into()));
    }
    let pc = pseudonat_category(h, h, caps)?;
    let no = pc.objects.len();
    let mut tensor_obj = vec![vec![0usize; no]; no];
    for i in 0..no {
        for j in 0..no {
            let vw = compose_pseudonats(&pc.objects[i], &pc.objects[j])?;
            tensor_obj[i][j] = pc.find_object(&vw).ok_or_else(|| {
                Error::Invalid("tensor of center objects left the enumerated set".into())
            })?;
        }
    }
    let nm = pc.morphisms.len();
    let mut tensor_mor = vec![vec![0usize; nm]; nm];
    for i in 0..nm {
        for j in 0..nm {
            let mm = hcompose_modifications(&pc.morphisms[i], &pc.morphisms[j])?;
            let src = tensor_obj[pc.cat.morphisms[i].src][pc.cat.morphisms[j].src];
            let tgt = tensor_obj[pc.cat.morphisms[i].tgt][pc.cat.morphisms[j].tgt];
            tensor_mor[i][j] = pc
                .morphisms
                .iter()
                .enumerate()
                .position(|(k, m)| {
                    pc.cat.morphisms[k].src == src && pc.cat.morphisms[k].tgt == tgt && m.comp == mm.comp
                })
                .ok_or_else(|| {
                    Error::Invalid("tensor of center morphisms left the enumerated set".into())
                })?;
        }
    }
    let unit = pc
        .find_object(&identity_pseudonat(h))
        .ok_or_else(|| Error::Invalid("identity pseudonat missing from center".into()))?;
    Ok(RelativeCenter {
        monoidal: MonoidalCat {
            cat: pc.cat.clone(),
            tensor_obj,
            tensor_mor,
            unit,
        },
        objects: pc.objects,
        morphisms: pc.morphisms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group_3};
    use crate::two_cat::{delooping, strict_two_group, unit_2cat, validate_2category};

    fn arc(b: Fin2Cat) -> Arc<Fin2Cat> {
        Arc::new(b)
    }

    /// The inversion 2-functor on the delooping of an abelian group.
    pub(crate) fn inversion_functor(b: &Arc<Fin2Cat>, g: &crate::group::FinGroup) -> PseudoFunctor {
        let mut f = identity_pseudofunctor(b);
        let hm = f.hom_map.get_mut(&(0, 0)).unwrap();
        hm.obj = g.inv.clone();
        hm.mor = g.inv.clone();
        // identity compositors on the permuted 1-cells
        let table = (0..g.order())
            .map(|x| {
                (0..g.order())
                    .map(|y| {
                        let xy = g.mul(g.inv[x], g.inv[y]);
                        b.hom(0, 0).id_of(xy)
                    })
                    .collect()
            })
            .collect();
        f.compositor.insert((0, 0, 0), table);
        f
    }

    #[test]
    fn identity_pseudofunctor_passes() {
        for b in [
            unit_2cat(),
            delooping(&cyclic_group(4)),
            strict_two_group(&cyclic_group(2), &cyclic_group(2)).unwrap(),
        ] {
            let b = arc(b);
            let f = identity_pseudofunctor(&b);
            assert!(validate_pseudofunctor(&f).passed());
            assert!(f.unital && f.strict);
        }
    }

    #[test]
    fn inversion_on_sigma_c4_is_a_2functor() {
        let g = cyclic_group(4);
        let b = arc(delooping(&g));
        let f = inversion_functor(&b, &g);
        assert!(validate_pseudofunctor(&f).passed());
        let ff = compose_pseudofunctors(&f, &f).unwrap();
        assert!(same_functor(&ff, &identity_pseudofunctor(&b)));
        let idf = compose_pseudofunctors(&identity_pseudofunctor(&b), &f).unwrap();
        assert!(same_functor(&idf, &f));
    }

    #[test]
    fn compose_mismatch_is_rejected() {
        let b = arc(delooping(&cyclic_group(2)));
        let c = arc(delooping(&cyclic_group(3)));
        let f = identity_pseudofunctor(&b);
        let g = identity_pseudofunctor(&c);
        assert!(matches!(
            compose_pseudofunctors(&g, &f),
            Err(Error::SourceTargetMismatch(_))
        ));
    }

    #[test]
    fn broken_compositor_fails_validation() {
        let g = cyclic_group(4);
        let b = arc(delooping(&g));
        let mut f = inversion_functor(&b, &g);
        // rewire one compositor entry to a 2-cell with the wrong endpoints
        f.compositor.get_mut(&(0, 0, 0)).unwrap()[1][1] = 0;
        let r = validate_pseudofunctor(&f);
        assert!(!r.passed());
    }

    /// A unital pseudofunctor on a strict 2-group with compositor twisted by
    /// a normalized 2-cocycle `c`: `alpha_{x,y} = tau^{c(x,y)}` on the
    /// identity hom functor.
    pub(crate) fn cocycle_pseudofunctor(
        b: &Arc<Fin2Cat>,
        pi1: &crate::group::FinGroup,
        pi2: &crate::group::FinGroup,
        c: &dyn Fn(usize, usize) -> usize,
    ) -> PseudoFunctor {
        let mut f = identity_pseudofunctor(b);
        let n2 = pi2.order();
        let table = (0..pi1.order())
            .map(|x| {
                (0..pi1.order())
                    .map(|y| pi1.mul(x, y) * n2 + c(x, y))
                    .collect()
            })
            .collect();
        f.compositor.insert((0, 0, 0), table);
        let (unital, strict) = f.computed_flags();
        f.unital = unital;
        f.strict = strict;
        f
    }

    #[test]
    fn cocycle_compositor_passes_and_coboundary_violations_fail() {
        let pi1 = cyclic_group(2);
        let pi2 = cyclic_group(2);
        let b = arc(strict_two_group(&pi1, &pi2).unwrap());
        // normalized 2-cocycle on C2 with values in C2: c(s,s) = 1
        let f = cocycle_pseudofunctor(&b, &pi1, &pi2, &|x, y| usize::from(x == 1 && y == 1));
        assert!(validate_pseudofunctor(&f).passed());
        assert!(f.unital && !f.strict);
        // non-normalized cochain breaks the unit triangle
        let bad = cocycle_pseudofunctor(&b, &pi1, &pi2, &|x, _| usize::from(x == 1));
        let r = validate_pseudofunctor(&bad);
        assert!(r.has_tag(AxiomTag::UnitTriangle));
    }

    #[test]
    fn identity_pseudonat_passes_everywhere() {
        for b in [delooping(&symmetric_group_3()), unit_2cat()] {
            let b = arc(b);
            let f = Arc::new(identity_pseudofunctor(&b));
            let id = identity_pseudonat(&f);
            assert!(validate_pseudonat(&id).passed());
        }
    }

    #[test]
    fn central_elements_give_pseudonats_on_deloopings() {
        // comp0 = z with identity comp2 is a pseudonat Id -> Id iff z central
        let s3 = symmetric_group_3();
        let b = arc(delooping(&s3));
        let f = Arc::new(identity_pseudofunctor(&b));
        for z in 0..s3.order() {
            let mut chi = identity_pseudonat(&f);
            chi.comp0 = vec![z];
            chi.comp2 = {
                let mut m = BTreeMap::new();
                m.insert(
                    (0, 0),
                    (0..s3.order())
                        .map(|x| b.hom(0, 0).id_of(s3.mul(z, x)))
                        .collect(),
                );
                m
            };
            let central = (0..s3.order()).all(|x| s3.mul(z, x) == s3.mul(x, z));
            let report = validate_pseudonat(&chi);
            assert_eq!(report.passed(), central, "element {}", s3.name(z));
            if !central {
                assert!(report.has_tag(AxiomTag::Reference) || report.has_tag(AxiomTag::Naturality));
            }
        }
    }

    #[test]
    fn pseudonat_category_counts_by_center() {
        for (g, expect) in [
            (cyclic_group(4), 4usize),
            (symmetric_group_3(), 1),
            (cyclic_group(1), 1),
        ] {
            let b = arc(delooping(&g));
            let f = Arc::new(identity_pseudofunctor(&b));
            let pc = pseudonat_category(&f, &f, SearchCaps::default()).unwrap();
            assert_eq!(pc.objects.len(), expect, "group {:?}", g.elements);
            // deloopings have only identity 2-cells, so only identity modifications
            assert_eq!(pc.morphisms.len(), expect);
            assert!(pc.cat.validate("pseunat").passed());
        }
    }

    #[test]
    fn pseudonat_category_over_unit_2cat() {
        let b = arc(unit_2cat());
        let f = Arc::new(identity_pseudofunctor(&b));
        let pc = pseudonat_category(&f, &f, SearchCaps::default()).unwrap();
        assert_eq!((pc.objects.len(), pc.morphisms.len()), (1, 1));
    }

    #[test]
    fn budget_is_enforced() {
        let b = arc(delooping(&cyclic_group(4)));
        let f = Arc::new(identity_pseudofunctor(&b));
        assert!(matches!(
            pseudonat_category(&f, &f, SearchCaps::new(2)),
            Err(Error::SearchBudgetExceeded { .. })
        ));
    }

    #[test]
    fn tensor_of_identity_pseudonats_is_identity() {
        let b = arc(delooping(&cyclic_group(4)));
        let f = Arc::new(identity_pseudofunctor(&b));
        let id = identity_pseudonat(&f);
        let t = tensor_pseudonat(&id, &id).unwrap();
        assert!(validate_pseudonat(&t).passed());
        assert!(same_pseudonat(&t, &identity_pseudonat(&Arc::new(compose_pseudofunctors(&f, &f).unwrap()))));
    }

    #[test]
    fn tensor_components_multiply_on_deloopings() {
        let g = cyclic_group(4);
        let b = arc(delooping(&g));
        let f = Arc::new(identity_pseudofunctor(&b));
        let pc = pseudonat_category(&f, &f, SearchCaps::default()).unwrap();
        for beta in &pc.objects {
            for alpha in &pc.objects {
                let t = tensor_pseudonat(beta, alpha).unwrap();
                assert!(validate_pseudonat(&t).passed());
                assert_eq!(t.comp0[0], g.mul(beta.comp0[0], alpha.comp0[0]));
            }
        }
    }

    #[test]
    fn tensor_modifications_on_two_group() {
        let pi = cyclic_group(2);
        let b = arc(strict_two_group(&pi, &pi).unwrap());
        assert!(validate_2category(&b).passed());
        let f = Arc::new(identity_pseudofunctor(&b));
        let pc = pseudonat_category(&f, &f, SearchCaps::default()).unwrap();
        assert!(!pc.morphisms.is_empty());
        for m in &pc.morphisms {
            for mp in &pc.morphisms {
                let t = tensor_modifications(m, mp).unwrap();
                assert!(validate_modification(&t).passed());
            }
        }
    }

    #[test]
    fn comparison_constraint_is_valid_and_identity_on_strict_data() {
        let g = cyclic_group(4);
        let b = arc(delooping(&g));
        let f = Arc::new(identity_pseudofunctor(&b));
        let pc = pseudonat_category(&f, &f, SearchCaps::default()).unwrap();
        for alpha in &pc.objects {
            for beta in &pc.objects {
                let c = comparison_constraint(alpha, beta).unwrap();
                assert!(validate_modification(&c).passed());
                // only identity 2-cells here
                let idc = identity_modification(&c.source);
                assert_eq!(c.comp, idc.comp);
            }
        }
    }

    #[test]
    fn associativity_constraint_identity_for_2functors_and_pentagon() {
        let g = cyclic_group(4);
        let b = arc(delooping(&g));
        let f = Arc::new(identity_pseudofunctor(&b));
        let pc = pseudonat_category(&f, &f, SearchCaps::default()).unwrap();
        let xs = &pc.objects;
        for a in xs.iter().take(2) {
            for bb in xs.iter().take(2) {
                for c in xs.iter().take(2) {
                    let m = associativity_constraint(a, bb, c).unwrap();
                    assert!(validate_modification(&m).passed());
                    assert_eq!(m.comp, identity_modification(&m.source).comp);
                    for d in xs.iter().take(2) {
                        assert!(pentagon_holds(a, bb, c, d).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn pentagon_with_nontrivial_compositor() {
        let pi1 = cyclic_group(2);
        let pi2 = cyclic_group(2);
        let b = arc(strict_two_group(&pi1, &pi2).unwrap());
        let fc = Arc::new(cocycle_pseudofunctor(&b, &pi1, &pi2, &|x, y| {
            usize::from(x == 1 && y == 1)
        }));
        assert!(validate_pseudofunctor(&fc).passed());
        let pc = pseudonat_category(&fc, &fc, SearchCaps::default()).unwrap();
        assert!(!pc.objects.is_empty());
        for a in &pc.objects {
            for bb in &pc.objects {
                for c in &pc.objects {
                    let m = associativity_constraint(a, bb, c).unwrap();
                    assert!(validate_modification(&m).passed());
                    for d in &pc.objects {
                        assert!(pentagon_holds(a, bb, c, d).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn relative_center_counts_match_group_centers() {
        for (g, expect) in [
            (cyclic_group(4), 4usize),
            (symmetric_group_3(), 1),
            (cyclic_group(3), 3),
        ] {
            let b = arc(delooping(&g));
            let id = Arc::new(identity_pseudofunctor(&b));
            let z = relative_center(&id, SearchCaps::default()).unwrap();
            assert_eq!(z.monoidal.n_objects(), expect);
            assert!(validate_monoidal(&z.monoidal).passed());
            // tensor of center objects multiplies representatives
            if g.is_abelian() {
                for i in 0..expect {
                    for j in 0..expect {
                        let zi = z.objects[i].comp0[0];
                        let zj = z.objects[j].comp0[0];
                        let zij = z.objects[z.monoidal.tensor_obj[i][j]].comp0[0];
                        assert_eq!(zij, g.mul(zi, zj));
                    }
                }
            }
        }
    }

    #[test]
    fn relative_center_needs_unital() {
        let g = cyclic_group(2);
        let b = arc(delooping(&g));
        let mut f = identity_pseudofunctor(&b);
        f.unital = false;
        assert!(matches!(
            relative_center(&Arc::new(f), SearchCaps::default()),
            Err(Error::NotUnital(_))
        ));
    }

    #[test]
    fn relative_center_on_unit_2cat_is_trivial() {
        let b = arc(unit_2cat());
        let id = Arc::new(identity_pseudofunctor(&b));
        let z = relative_center(&id, SearchCaps::default()).unwrap();
        assert_eq!(z.monoidal.n_objects(), 1);
        assert_eq!(z.monoidal.cat.n_morphisms(), 1);
    }
}
