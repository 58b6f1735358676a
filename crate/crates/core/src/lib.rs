//! Ideal theory of finite pointed commutative monoids.
//!
//! Monoids are given by Cayley tables over at most 64 elements; element sets
//! are single-word bit vectors. On top of the ideal calculus sit decision
//! procedures for the ideal classes, contraction and extension along
//! homomorphisms and localizations, irreducible and primary decompositions,
//! and a suite that checks the structural theorems over a corpus.

pub mod bitset;
pub mod classify;
pub mod cli;
pub mod corpus;
pub mod decomposition;
pub mod format;
pub mod ideal;
pub mod localization;
pub mod monoid;
pub mod morphism;
pub mod oracle;
pub mod theorems;

pub use bitset::{ElemSet, MAX_ELEMENTS};
pub use ideal::{Ideal, IdealLattice};
pub use monoid::{FiniteMonoid, MonoidError, MonoidId};

/// Size caps shared by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// At most [`MAX_ELEMENTS`].
    pub max_elements: usize,
    pub max_ideals: usize,
    pub antichain_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: MAX_ELEMENTS,
            max_ideals: ideal::DEFAULT_MAX_IDEALS,
            antichain_budget: decomposition::DEFAULT_ANTICHAIN_BUDGET,
        }
    }
}
