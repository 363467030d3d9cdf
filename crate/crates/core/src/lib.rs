//! Computational toolkit for Nevanlinna value-distribution theory.
//!
//! The crate models a closed family of meromorphic functions (rational
//! functions, rational-times-exponential products, linear tangents, their
//! reciprocals and shifts), evaluates Nevanlinna's proximity, counting, and
//! characteristic functions on them, and checks sharp non-asymptotic bounds
//! for logarithmic derivatives together with certificate forms for
//! differential polynomials.
//!
//! Everything is deterministic: fixed quadrature schedules, seeded corpora,
//! and pairwise summation keep every reported number reproducible to the
//! digit across runs.

pub mod error;
pub mod util;

pub mod logcomplex;
pub mod poly;
pub mod rational;
pub mod roots;

pub mod funcmodel;
pub mod modeltext;

pub mod charfn;
pub mod diffpoly;
pub mod difftext;
pub mod quad;

pub mod neldermead;

pub mod bounds;
pub mod report;
pub mod verify;

pub use bounds::{BoundCertificate, CertificateMode, KappaResult};
pub use error::{Error, Result};
pub use funcmodel::FunctionModel;
pub use logcomplex::LogComplex;
pub use poly::Polynomial;
pub use quad::{AngleSet, QuadratureConfig};
pub use rational::RationalFunction;
pub use verify::{CheckReport, SharpnessRow};
