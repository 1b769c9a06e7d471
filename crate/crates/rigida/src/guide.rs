//! The narrative guide, compiled as doc-tests.
//!
//! Each chapter of the book in `book/src/` is included here as module
//! documentation, so every fenced Rust snippet in the guide runs under
//! `cargo test --doc` and cannot drift out of sync with the crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/structure-constants.md")]
pub mod structure_constants {}

#[doc = include_str!("../../../book/src/rigidity.md")]
pub mod rigidity {}

#[doc = include_str!("../../../book/src/jordan-chevalley.md")]
pub mod jordan_chevalley {}

#[doc = include_str!("../../../book/src/algebraicity.md")]
pub mod algebraicity_guide {}

#[doc = include_str!("../../../book/src/rank-criterion.md")]
pub mod rank_criterion {}

#[doc = include_str!("../../../book/src/catalog-and-cli.md")]
pub mod catalog_and_cli {}
