//! Exact-arithmetic toolkit for twisted conjugacy on finitely generated
//! torsion-free nilpotent groups, presented through their rational Mal'cev
//! Lie algebras.
//!
//! The crate decides, for an automorphism given as a matrix acting on a
//! nilpotent Lie algebra over Q, whether the automorphism has finite
//! Reidemeister numbers, whether all of its iterates do (tameness), and
//! whether it is Anosov (no eigenvalue of absolute value 1). It computes
//! the Reidemeister numbers `R(phi^n)` exactly and assembles the
//! Reidemeister zeta function `exp(sum R(phi^n) z^n / n)` both as a
//! truncated power series and in closed rational form.
//!
//! Everything is exact: rationals are `num_rational::BigRational`, and the
//! classification pipeline (root-of-unity detection, unit-circle root
//! counting via Sturm sequences) never touches floating point.
//!
//! ```
//! use reidzeta::families::abelian;
//! use reidzeta::matrix::RatMatrix;
//! use reidzeta::nilpotent::check_automorphism;
//! use reidzeta::spectral::classify;
//! use reidzeta::zeta::{verify_zeta, zeta_closed_form};
//!
//! let lattice = abelian(2);
//! let cat_map = RatMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
//! let phi = check_automorphism(&lattice, cat_map)?;
//!
//! let report = classify(&phi.matrix().char_poly()?)?;
//! assert!(report.anosov);
//!
//! let form = zeta_closed_form(&phi)?;
//! assert_eq!(form.display(), "(1 - z)^2 / (1 - 3z + z^2)");
//! verify_zeta(&phi, 15)?;
//! # Ok::<(), reidzeta::Error>(())
//! ```
//!
//! Modules:
//! - [`rat`], [`poly`], [`matrix`], [`snf`], [`sturm`]: exact kernels.
//! - [`spectral`]: classification of a characteristic polynomial.
//! - [`nilpotent`]: Lie algebras by structure constants, automorphisms,
//!   graded data and Reidemeister numbers.
//! - [`zeta`]: zeta series and closed rational form.
//! - [`families`]: free nilpotent (Hall basis), graph, abelian, Heisenberg
//!   and direct-sum constructors with family-level tameness criteria.
//! - [`oracle`]: brute-force twisted-conjugacy counting used as an
//!   independent check.
//! - [`schema`]: the JSON wire formats.
//! - [`survey`]: reproducible random-graph surveys.

// indexed loops over matrix entries read better than iterator chains here
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod families;
pub mod matrix;
pub mod nilpotent;
pub mod oracle;
pub mod poly;
pub mod rat;
pub mod schema;
pub mod snf;
pub mod spectral;
pub mod sturm;
pub mod survey;
pub mod zeta;

pub use error::{Error, Result};
pub use rat::Rat;
