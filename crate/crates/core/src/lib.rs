//! Exact structure-constant toolkit for finite-dimensional associative
//! algebras over the rationals.
//!
//! The crate decides commutator-simplicity (no nonzero ideal inside
//! `[A,A]`), computes radicals and trace functionals, solves for
//! derivation-type map spaces, and checks Jordan-homomorphism criteria. All
//! arithmetic is exact; "for every x" conditions are turned into finitely
//! many linear constraints by polarization over basis tuples.
//!
//! Start with the runnable programs under `examples/`, one per capability.

pub mod algebra;
pub mod document;
pub mod linalg;
pub mod maps;
pub mod pipeline;
pub mod random;
pub mod report;
pub mod structure;

pub use algebra::{Element, FinAlgebra, FiniteGroup, Side};
pub use linalg::{Mat, Rational, Subspace};
