//! Exact formal power series reversion through développements limités.
//!
//! The crate is layered bottom-up:
//!
//! - [`ring`]: rationals, sparse multivariate polynomials, matrices and
//!   fraction-free determinants.
//! - [`series`]: truncated power series with inversion, composition,
//!   Newton reversion, `exp`/`log`/powers and calculus.
//! - [`reversion`]: the truncated-product polynomials `P_n`, their mirrors
//!   `Q_n`, the reversion series `q`, Lagrange–Bürmann identities and the
//!   interpolation of composition iterates.
//! - [`interp`]: the semidirect product of unit series and tangent
//!   diffeomorphisms and the deformation from inversion to reversion.
//! - [`hankel`]: inverse and binomial transforms, Hankel determinants,
//!   condensation, and Jacobi continued fractions.
//! - [`combinatorics`]: Łukasiewicz words, Motzkin paths, plane and binary
//!   trees, used as independent oracles for the algebra.
//! - [`verify`]: named self-check suites exposed by the command line tool.

pub mod combinatorics;
pub mod error;
pub mod hankel;
pub mod interp;
pub mod reversion;
pub mod ring;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Matrix, MultiPoly, Rational, Ring, UniPoly};
pub use series::TruncatedSeries;
