//! Validation reports: every axiom checker returns a `ValidationReport`
//! listing each failed axiom instance with a witness, instead of erroring
//! on the first failure.

use std::fmt;

/// Tags identifying which axiom an instance check belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomTag {
    /// Dangling or out-of-range id in a table.
    Reference,
    /// A hom-category axiom (composability, associativity, identity laws).
    HomCategory,
    /// Horizontal composition of 1-cells fails associativity or unit laws.
    UnitOrAssoc,
    /// Horizontal composition of 2-cells is not functorial.
    Interchange,
    /// Functor tables do not preserve sources, targets, identities or composition.
    Functoriality,
    /// Pseudofunctor compositor fails naturality.
    CompositorNaturality,
    /// Pseudofunctor compositor fails the hexagon coherence.
    CompositorHexagon,
    /// Pseudofunctor unit constraint fails a unit triangle.
    UnitTriangle,
    /// Declared unital/strict flags contradict the stored tables.
    FlagMismatch,
    /// Pseudonatural transformation components fail naturality.
    Naturality,
    /// Pseudonatural transformation fails the composition axiom.
    PseudonatComposition,
    /// Pseudonatural transformation fails the unit axiom.
    PseudonatUnit,
    /// A modification square does not commute.
    ModificationSquare,
    /// A 2-cell required to be invertible has no two-sided inverse.
    NotInvertible,
    /// Monoidal tables fail strict associativity/unit or functoriality.
    Monoidality,
    /// Unitality conditions on action data (F_1, chi with unit index, omega
    /// with unit index, gamma_1, Pi with unit index, U_1, theta_1, ...).
    Unitality,
    /// A component of omega is not a valid modification.
    OmegaModification,
    /// The pentagon axiom for the action modifications omega.
    PentagonMN2,
    /// The coherence axiom for the Pi data of a G-pseudofunctor.
    PiCoherence,
    /// The compatibility axiom for a G-pseudonatural transformation.
    GPseudonatSquare,
    /// The compatibility axiom for a G-modification.
    GModificationCompat,
    /// The 0-cell axiom of the strictification.
    ObjAxiom,
    /// The 1-cell axiom of the strictification.
    OneCellAxiom,
    /// The 2-cell axiom of the strictification.
    TwoCellAxiom,
    /// Strictness conditions on an action (composite functors, identity chi/omega).
    Strictness,
    /// The coherence axiom for equivariant 0-cells.
    APiEq,
    /// The compatibility axiom for equivariant 1-cells.
    Equiva1Cell,
    /// The compatibility axiom for equivariant 2-cells.
    Equiva2Cell,
    /// A grading constraint of a crossed category.
    Grading,
    /// The stored group action tables on a crossed category are not functorial
    /// or do not compose as the group does.
    ActionFunctor,
    /// Naturality of the crossed braiding.
    BraidNaturality,
    /// Compatibility of the braiding with the group action.
    BraidAxiom1,
    /// The braiding hexagon splitting the right tensor factor.
    BraidAxiom2,
    /// The braiding hexagon splitting the left tensor factor.
    BraidAxiom3,
    /// The epsilon/Pi cancellation identities.
    EpsilonPi,
    /// The epsilon cocycle identity.
    EpsilonPi2,
    /// The associativity identity for the monoidal action isomorphisms nu.
    AssocMonL,
    /// Equivariant object data fails its cocycle condition.
    EquivariantObject,
    /// The comparison functor of the center theorem is not well defined.
    PsiWellDefined,
    /// The comparison functor of the center theorem is not bijective on cells.
    PsiBijective,
    /// The comparison functor of the center theorem is not monoidal on tables.
    PsiMonoidal,
    /// Proof-step checks of the biequivalence property.
    Biequivalence,
}

impl fmt::Display for AxiomTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// One failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub tag: AxiomTag,
    /// Human-readable description of the offending cell tuple.
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.tag, self.witness)
    }
}

/// Outcome of an exhaustive axiom scan. Passes iff no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fail(tag: AxiomTag, witness: impl Into<String>) -> Self {
        let mut r = Self::new();
        r.push(tag, witness);
        r
    }

    pub fn push(&mut self, tag: AxiomTag, witness: impl Into<String>) {
        self.violations.push(Violation {
            tag,
            witness: witness.into(),
        });
    }

    /// Merges another report into this one.
    pub fn absorb(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Sorts violations for deterministic output regardless of scan order.
    pub fn finish(mut self) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has_tag(&self, tag: AxiomTag) -> bool {
        self.violations.iter().any(|v| v.tag == tag)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            writeln!(f, "fail ({} violations)", self.violations.len())?;
            for v in &self.violations {
                writeln!(f,"  {}", v)?;
            }
            Ok(())
        }
    }
}
