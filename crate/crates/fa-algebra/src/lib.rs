//! Computing with FA-presentable (automatic) algebras.
//!
//! An FA-presentation describes a relational structure or algebra by a regular
//! language of representative words together with synchronous multi-tape
//! automata recognizing the (convolutions of the) structure's relations. This
//! crate provides:
//!
//! * a finite-automata engine over padded tuple alphabets ([`automata`]),
//!   including convolution, boolean combinations, projection and
//!   cylindrification;
//! * a data model for presentations with exact well-formedness checks
//!   ([`presentation`]);
//! * a compiler from first-order formulas to relation automata ([`fo`]);
//! * the pumping/shift calculus for injective unary presentations over `a*`,
//!   grid diagrams, and normalization to injective form ([`unary`]);
//! * the effective construction of the representative language of a finitely
//!   generated subalgebra of a unary-presented algebra, with decidable
//!   membership and induced presentations ([`subalgebra`]);
//! * growth levels of finitely generated algebras and the linear bound for
//!   unary presentations ([`growth`]);
//! * a corpus of executable constructions: small arithmetic fixtures, the
//!   single-unary-operation subalgebra builder, and a counterexample algebra
//!   built around a Turing machine that enumerates square tape contents
//!   ([`corpus`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely between threads. Batch-style loops
//! (closure oracles, growth tables) run on a rayon pool when the `parallel`
//! feature is enabled; a sequential fallback is always compiled in and can be
//! selected at runtime with [`exec::set_parallel`].

pub mod automata;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod fo;
pub mod growth;
pub mod json;
pub mod presentation;
pub mod subalgebra;
pub mod unary;

pub use automata::{Alphabet, Dfa, Nfa, PaddedWord, TupleAlphabet, Word};
pub use error::{Error, Result};
pub use presentation::{Presentation, Signature, ValidationReport};
pub use unary::{UnaryPresentation, UnarySet};
