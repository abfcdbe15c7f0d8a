//! Finite categories given by explicit object/morphism lists and a partial
//! composition table.

use crate::report::{AxiomTag, ValidationReport};

/// A morphism of a finite category. `src`/`tgt` are object indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mor {
    pub src: usize,
    pub tgt: usize,
    pub name: String,
}

/// A finite category. Objects and morphisms are indexed `0..n`; the
/// composition table is defined exactly on composable pairs.
///
/// `compose[f][g]` is `f . g` (apply `g` first), defined iff
/// `mor[g].tgt == mor[f].src`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    pub objects: Vec<String>,
    pub morphisms: Vec<Mor>,
    pub compose: Vec<Vec<Option<usize>>>,
    /// `identity[a]` = id morphism of object `a`.
    pub identity: Vec<usize>,
}

impl FinCat {
    /// The discrete category on the given object names (identities only).
    pub fn discrete(objects: Vec<String>) -> FinCat {
        let morphisms: Vec<Mor> = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Mor {
                src: i,
                tgt: i,
                name: format!("id_{o}"),
            })
            .collect();
        let n = morphisms.len();
        let compose = (0..n)
            .map(|f| {
                (0..n)
                    .map(|g| if f == g { Some(f) } else { None })
                    .collect()
            })
            .collect();
        FinCat {
            identity: (0..objects.len()).collect(),
            objects,
            morphisms,
            compose,
        }
    }

    /// The empty category.
    pub fn empty() -> FinCat {
        FinCat {
            objects: vec![],
            morphisms: vec![],
            compose: vec![],
            identity: vec![],
        }
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    /// `f . g` (apply `g` first); None when not composable.
    pub fn comp(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(f).and_then(|row| row.get(g)).copied()?
    }

    pub fn id_of(&self, obj: usize) -> usize {
        self.identity[obj]
    }

    /// Two-sided inverse under composition, if any. Inverses are unique.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let m = &self.morphisms[f];
        (0..self.n_morphisms()).find(|&g| {
            self.morphisms[g].src == m.tgt
                && self.morphisms[g].tgt == m.src
                && self.comp(f, g) == Some(self.id_of(m.tgt))
                && self.comp(g, f) == Some(self.id_of(m.src))
        })
    }

    pub fn is_iso(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    /// Morphisms `a -> b`.
    pub fn hom_set(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.n_morphisms())
            .filter(|&f| self.morphisms[f].src == a && self.morphisms[f].tgt == b)
            .collect()
    }

    pub fn mor_name(&self, f: usize) -> &str {
        &self.morphisms[f].name
    }

    /// Exhaustive check of the category axioms; `label` prefixes witnesses.
    pub fn validate(&self, label: &str) -> ValidationReport {
        let mut r = ValidationReport::new();
        let no = self.n_objects();
        let nm = self.n_morphisms();
        if self.identity.len() != no {
            r.push(
                AxiomTag::Reference,
                format!("{label}: identity table has wrong length"),
            );
            return r.finish();
        }
        if self.compose.len() != nm || self.compose.iter().any(|row| row.len() != nm) {
            r.push(
                AxiomTag::Reference,
                format!("{label}: compose table must be {nm}x{nm}"),
            );
            return r.finish();
        }
        for (f, m) in self.morphisms.iter().enumerate() {
            if m.src >= no || m.tgt >= no {
                r.push(
                    AxiomTag::Reference,
                    format!("{label}: morphism {} has dangling endpoints", m.name),
                );
                return r.finish();
            }
            let _ = f;
        }
        for (a, &i) in self.identity.iter().enumerate() {
            if i >= nm {
                r.push(
                    AxiomTag::Reference,
                    format!("{label}: identity[{}] = {} out of range", self.objects[a], i),
                );
                return r.finish();
            }
            if self.morphisms[i].src != a || self.morphisms[i].tgt != a {
                r.push(
                    AxiomTag::HomCategory,
                    format!(
                        "{label}: identity[{}] = {} is not an endomorphism of {}",
                        self.objects[a],
                        self.morphisms[i].name,
                        self.objects[a]
                    ),
                );
            }
        }
        // compose defined iff composable, with matching endpoints
        for f in 0..nm {
            for g in 0..nm {
                let composable = self.morphisms[g].tgt == self.morphisms[f].src;
                match self.compose[f][g] {
                    Some(h) => {
                        if !composable {
                            r.push(
                                AxiomTag::HomCategory,
                                format!(
                                    "{label}: compose[{},{}] defined on non-composable pair",
                                    self.mor_name(f),
                                    self.mor_name(g)
                                ),
                            );
                        } else if h >= nm {
                            r.push(
                                AxiomTag::Reference,
                                format!(
                                    "{label}: compose[{},{}] = {} out of range",
                                    self.mor_name(f),
                                    self.mor_name(g),
                                    h
                                ),
                            );
                        } else if self.morphisms[h].src != self.morphisms[g].src
                            || self.morphisms[h].tgt != self.morphisms[f].tgt
                        {
                            r.push(
                                AxiomTag::HomCategory,
                                format!(
                                    "{label}: compose[{},{}] = {} has wrong endpoints",
                                    self.mor_name(f),
                                    self.mor_name(g),
                                    self.mor_name(h)
                                ),
                            );
                        }
                    }
                    None => {
                        if composable {
                            r.push(
                                AxiomTag::HomCategory,
                                format!(
                                    "{label}: compose[{},{}] undefined on composable pair",
                                    self.mor_name(f),
                                    self.mor_name(g)
                                ),
                            );
                        }
                    }
                }
            }
        }
        if !r.passed() {
            return r.finish();
        }
        // identity laws
        for f in 0..nm {
            let m = &self.morphisms[f];
            if self.comp(self.id_of(m.tgt), f) != Some(f) || self.comp(f, self.id_of(m.src)) != Some(f)
            {
                r.push(
                    AxiomTag::HomCategory,
                    format!("{label}: identity law fails at {}", self.mor_name(f)),
                );
            }
        }
        // associativity on all composable triples
        for f in 0..nm {
            for g in 0..nm {
                if self.morphisms[g].tgt != self.morphisms[f].src {
                    continue;
                }
                for h in 0..nm {
                    if self.morphisms[h].tgt != self.morphisms[g].src {
                        continue;
                    }
                    let fg_h = self.comp(f, g).and_then(|fg| self.comp(fg, h));
                    let f_gh = self.comp(g, h).and_then(|gh| self.comp(f, gh));
                    if fg_h != f_gh || fg_h.is_none() {
                        r.push(
                            AxiomTag::HomCategory,
                            format!(
                                "{label}: associativity fails at ({}, {}, {})",
                                self.mor_name(f),
                                self.mor_name(g),
                                self.mor_name(h)
                            ),
                        );
                    }
                }
            }
        }
        r.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_category_is_valid() {
        let c = FinCat::discrete(vec!["x".into(), "y".into()]);
        assert!(c.validate("disc").passed());
        assert_eq!(c.hom_set(0, 1), Vec::<usize>::new());
    }

    #[test]
    fn broken_identity_law_is_caught() {
        let mut c = FinCat::discrete(vec!["x".into()]);
        c.compose[0][0] = None;
        let r = c.validate("bad");
        assert!(!r.passed());
        assert!(r.has_tag(AxiomTag::HomCategory));
    }

    #[test]
    fn inverse_search_on_group_as_category() {
        // one object, morphisms = C2
        let c = FinCat {
            objects: vec!["*".into()],
            morphisms: vec![
                Mor { src: 0, tgt: 0, name: "e".into() },
                Mor { src: 0, tgt: 0, name: "t".into() },
            ],
            compose: vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]],
            identity: vec![0],
        };
        assert!(c.validate("c2").passed());
        assert_eq!(c.inverse(1), Some(1));
    }
}
