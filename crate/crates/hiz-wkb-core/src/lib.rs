//! Exact-arithmetic engine for the tau-polynomial expansion of
//! beta-deformed Harish-Chandra integrals over the classical compact groups.
//!
//! Everything in this crate is computed over exact fields (arbitrary-precision
//! rationals, or rational functions of the deformation parameter), so results
//! are reproducible bit for bit.  The crate is `no_std` + `alloc`; IO, file
//! formats and floating-point oracles live in the companion `hiz-wkb` crate.
//!
//! Module map:
//! - [`field`], [`upoly`], [`ratfun`]: coefficient fields and univariate
//!   rational functions of the Jack parameter.
//! - [`partitions`], [`linalg`]: integer partitions and exact linear algebra.
//! - [`polyring`]: sparse multivariate polynomials in the spectra `x`, `lambda`.
//! - [`jack`]: Jack symmetric functions in the power-sum basis, their
//!   characters and principal specializations.
//! - [`taugraph`]: multigraphs labelling tau-monomials, their orbit sums,
//!   degenerate-spectrum counts and characteristic differentials.
//! - [`wkb`]: the series and pole-cancellation pipelines for the coefficient
//!   tables, plus the large-`k` and duality maps.
//! - [`oracle`]: independent exact cross-checks (Calogero-type residuals,
//!   permutation sums, jet determinants).

#![no_std]

extern crate alloc;

pub mod field;
pub mod jet;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod polyring;
pub mod ratfun;
pub mod taugraph;
pub mod upoly;
pub mod wkb;

pub mod jack;

pub use field::{frac, rat, Field, Rat};
pub use partitions::Partition;
