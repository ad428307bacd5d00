//! Executable operads for symmetric monoidal categories.
//!
//! The library builds a small tower of non-symmetric operads of finite sets —
//! complete parenthesizations ([`tree::Tree`]), parenthesizations with a chosen
//! subset of variable slots ([`slots::Slotted`]), parenthesizations with an
//! adjoined zero that pairing drops ([`tree::V0Tree`]), and the terminal
//! operad ([`tree::TPoint`])
//! — together with the free symmetric operad construction `Q(n) x Sigma_n`
//! ([`sym::FreeSymOperad`]), endomorphism operads of finite sets ([`endo`]), and
//! a categorical operad of canonical isomorphisms whose algebras are symmetric
//! monoidal categories ([`cat`], [`diagrams`]).
//!
//! Everything here is finite and enumerable, so the operad axioms, freeness
//! properties, and coherence diagrams are checked by exhaustive suites
//! ([`laws`], [`coherence`]) rather than taken on faith.

pub mod cat;
pub mod cli;
pub mod coherence;
pub mod diagrams;
pub mod endo;
pub mod expr;
pub mod laws;
pub mod parse;
pub mod perm;
pub mod report;
pub mod slots;
pub mod sym;
pub mod tree;
pub mod view;

pub use cat::{ExprModel, ExprMorphism, Word, WordModel, WordMorphism, YMor, YModel, YOp};
pub use coherence::{Move, MoveKind, MoveSeq};
pub use endo::EndFn;
pub use expr::{Dir, Expr};
pub use perm::Permutation;
pub use report::Report;
pub use slots::Slotted;
pub use sym::SymElem;
pub use tree::{TPoint, Tree, V0Tree};
pub use view::{Operad, SymmetricOperad};

use thiserror::Error;

/// Structural errors raised by operad operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    /// An operation of degree `expected` was applied to `found` arguments.
    #[error("arity mismatch: operation of degree {expected} applied to {found} arguments")]
    ArityMismatch { expected: usize, found: usize },
    /// Two permutations that must share a degree do not.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    /// An image list that does not describe a bijection.
    #[error("not a permutation: images {0:?}")]
    NotBijective(Vec<usize>),
    /// A slot index outside `1..=internal_degree`, or a repeated slot.
    #[error("invalid slot set {slots:?} for a parenthesization of {leaves} leaves")]
    InvalidSlots { slots: Vec<usize>, leaves: usize },
    /// A lookup table whose shape does not match the declared arity/carrier.
    #[error("invalid table: {0}")]
    InvalidTable(String),
    /// Expression variable labels that fail to match up bijectively.
    #[error("variable labels do not match: {0}")]
    LabelMismatch(String),
    /// A rewrite move whose shape precondition fails at its path.
    #[error("move does not apply: {0}")]
    BadMove(String),
    /// Composition of morphisms whose endpoints do not meet.
    #[error("morphisms do not compose: {0}")]
    NotComposable(String),
}
