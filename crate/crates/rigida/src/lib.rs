//! # rigida
//!
//! An exact-arithmetic workbench for finite-dimensional Lie algebras given by
//! rational structure constants.
//!
//! Everything is computed over ℚ with arbitrary-precision integers: ranks and
//! kernels decide dimensions exactly, so the rigidity and algebraicity
//! diagnostics implemented here are certificates, not numerical estimates.
//!
//! The crate is organised in layers:
//!
//! * [`exactlin`] — rational matrices, polynomials and integer lattices
//!   (fraction-free elimination, Hermite/Smith forms),
//! * [`lie`] — structure constants, Jacobi checking, transport under basis
//!   change, descending series and characteristic sequences,
//! * [`cohomology`] — derivations, 2-cocycles, 2-coboundaries, orbit
//!   dimensions and the H² = 0 rigidity certificate (Nijenhuis–Richardson),
//! * [`jordan`] — the Jordan–Chevalley decomposition of a rational matrix,
//!   computed entirely over ℚ,
//! * [`algebraicity`] — linear Lie algebras as matrix spans, replica lattices
//!   of eigenvalue relations, Jordan saturation and algebraicity verdicts,
//! * [`structure`] — torus decompositions, weights, regular vectors and the
//!   rank criterion for solvable algebras with trivial center,
//! * [`catalog`] — a registry of worked examples with machine-checkable
//!   expected properties,
//! * [`io`] — the JSON file formats shared with the `rigida` command-line
//!   tool.
//!
//! A narrative guide with runnable examples lives in `book/`; its chapters
//! are compiled as doc-tests through the [`guide`] module.

pub mod algebraicity;
pub mod catalog;
pub mod cohomology;
pub mod exactlin;
pub mod guide;
pub mod io;
pub mod jordan;
pub mod lie;
pub mod rng;
pub mod structure;

pub use exactlin::{IntLattice, QMatrix, QPoly, QVector, Rational};
pub use lie::{CharSeq, LieLaw, StructureConstants};
