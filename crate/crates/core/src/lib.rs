//! Finite strict 2-categories with actions of finite groups.
//!
//! The crate represents 2-categories, pseudofunctors, pseudonatural
//! transformations and modifications as explicit finite tables, and builds
//! the derived structures attached to a group action: the strictification
//! `B[G]`, the equivariant 2-category `B^G`, relative centers of
//! pseudofunctors, and the braided G-crossed center `Z_G(B)`. Every axiom is
//! checked instance by instance on the tables; validators return reports
//! listing each failing instance with a witness.

pub mod cat;
pub mod centers;
pub mod equivariant;
pub mod error;
pub mod gaction;
pub mod group;
pub mod paste;
pub mod pseudo;
pub mod report;
pub mod strictify;
pub mod two_cat;

pub use error::{Error, Result};
pub use report::{AxiomTag, ValidationReport, Violation};

/// Budget for exhaustive enumerations. Every enumeration counts the
/// candidate assignments it visits and aborts with
/// [`Error::SearchBudgetExceeded`] past the cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    pub max_candidates: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps { max_candidates: 1_000_000 }
    }
}

impl SearchCaps {
    pub fn new(max_candidates: u64) -> Self {
        SearchCaps { max_candidates }
    }
}

/// Shared counter for enumeration budgets.
#[derive(Debug)]
pub(crate) struct Budget {
    visited: u64,
    cap: u64,
}

impl Budget {
    pub(crate) fn new(caps: SearchCaps) -> Self {
        Budget { visited: 0, cap: caps.max_candidates }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            Err(Error::SearchBudgetExceeded { visited: self.visited, cap: self.cap })
        } else {
            Ok(())
        }
    }
}
