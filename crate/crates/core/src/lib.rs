//! Minimal coset representatives of parabolic quotients of Weyl groups of
//! type B and D, Kostant's theorem on nilradical cohomology, and the degree
//! bookkeeping for residual Eisenstein cohomology of SO(n,2).
//!
//! The numeric core is generic over a [`Scalar`]; the aliases below fix
//! exact rational arithmetic, which is what every table in this crate uses.

pub mod eisenstein;
pub mod error;
pub mod forms;
pub mod hasse;
pub mod rootsys;
pub mod scalar;
pub mod so_n2;
pub mod verify;
pub mod weyl;

pub use eisenstein::{degree_support, evaluation_point, full_report, holomorphy_flag, kostant_mu, DegreeSupport, KostantRecord, Report};
pub use error::{Error, Result};
pub use forms::LinearForm;
pub use hasse::{bruhat_covers, build_hasse, delta_p, length_histogram, to_dot, DotOptions, HasseDiagram, ParabolicChoice};
pub use rootsys::{is_regular_dominant, EpsWeight, Root, RootDatum, RootKind, Weight};
pub use scalar::{Coord, Scalar};
pub use so_n2::{group_spec, GroupSpec, LeviFactor, LeviSubgroup, ParabolicId, Parity, RestrictionData, VanishingBounds};
pub use weyl::{apply_word, enumerate_group, inversion_set, minimal_reps_bruteforce, word_action_matrix, GroupElement, WeylWord};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Linear form in the λ-variables with rational coefficients.
pub type Form = LinearForm<Rational>;
/// Weight whose coordinates are linear forms in λ.
pub type SymbolicWeight = Weight<Form>;
/// Integral weight.
pub type IntWeight = Weight<i64>;
