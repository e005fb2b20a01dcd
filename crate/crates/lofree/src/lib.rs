//! Exact counting, enumeration, and spectral analysis of words in locally
//! free groups.
//!
//! A *locally free group* here is a partially commutative group whose
//! generators sit on a line (`Lf1`, generators `f_1 .. f_n`, where `f_j` and
//! `f_k` commute iff `|j - k| >= 2`) or on an `n x n` lattice (`Lf2`, two
//! generator colors `x`/`y` per site, with near-neighbor non-commutation
//! rules). The free groups on the same alphabets (`Free1`, `Free2`) serve as
//! baselines.
//!
//! The crate provides:
//!
//! * [`group`] — generator types, group flavors, and the commutation oracle;
//! * [`normal`] — canonical (normal) forms computed by two independent
//!   algorithms, used to decide word equality;
//! * [`count`] — exact big-integer recursions for the number of
//!   nonequivalent words, and the closed-form free-group baselines;
//! * [`explore`] — Cayley-graph breadth-first enumeration (ground truth for
//!   the counting recursions);
//! * [`spectral`] — transfer operators for the counting recursions, their
//!   dominant eigenvalues, and the associated closed forms / root problems;
//! * [`asympt`] — logarithm-scale asymptotic formulas and effective
//!   branching numbers.
//!
//! Floating-point routines are generic over the [`Real`] scalar trait
//! (implemented for `f32` and `f64`); exact counts always use
//! `num_bigint::BigUint`. Concrete `f64` aliases live at the crate root.

pub mod asympt;
pub mod count;
pub mod explore;
pub mod group;
pub mod normal;
pub mod spectral;

use std::fmt;
use std::iter::Sum;

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive};

/// Scalar trait for the floating-point lanes of the crate.
///
/// Anything implementing the usual `num-traits` float surface works; the
/// crate is exercised with `f64` (and compiles with `f32`, at reduced
/// precision — tolerances below ~1e-6 are not reachable in `f32`).
pub trait Real:
    Float + FloatConst + FromPrimitive + Sum<Self> + fmt::Debug + fmt::Display + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Sum<T> + fmt::Debug + fmt::Display + 'static
{
}

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A generator index (or lattice site) lies outside `1..=n`.
    #[error("generator out of range: {0}")]
    GeneratorOutOfRange(String),
    /// A parameter failed a precondition (bad `n`, `mu`, tolerance, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// An operation was asked of a flavor that does not support it.
    #[error("flavor {flavor} not supported by {op}")]
    UnsupportedFlavor { op: &'static str, flavor: String },
    /// Breadth-first exploration would exceed the configured state cap.
    #[error("state cap exceeded: {stored} stored forms, cap {cap}")]
    CapExceeded { stored: usize, cap: usize },
    /// Multiplying by one generator changed irreducible length by something
    /// other than +/-1 — this indicates a broken canonicalizer and is fatal.
    #[error("canonical-length anomaly: length {from} -> {to} after one letter")]
    LengthAnomaly { from: u64, to: u64 },
    /// Root bracketing failed: no sign change on the scan grid.
    #[error("no sign change found while bracketing a root ({0})")]
    NoSignChange(String),
    /// A branching-number estimate needs at least two sphere sizes.
    #[error("sphere profile too short for a branching estimate")]
    ProfileTooShort,
    /// A CSV/profile parse failed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub use group::{Axis, BaseGen, Flavor, GroupSpec, Sign, SignedGen, Word};
pub use normal::{CanonicalAlgo, Canonicalizer, NormalForm, Syllable};

/// `f64` transfer-operator spectral report.
pub type SpectralReport64 = spectral::SpectralReport<f64>;
/// `f64` 1D closed-form eigenpair.
pub type ClosedForm1d64 = spectral::ClosedForm1d<f64>;
/// `f64` root of the 2D dominant-eigenvalue polynomial.
pub type P1Root64 = spectral::P1Root<f64>;
/// `f64` 2D dominant-eigenvalue estimate.
pub type Lambda2d64 = spectral::Lambda2d<f64>;
/// `f64` asymptotic (log-scale) formula value.
pub type AsymptoticValue64 = asympt::AsymptoticValue<f64>;
