//! Scalar traits shared by the linear-form and weight machinery.
//!
//! Two layers:
//!
//! * [`Scalar`] is a coefficient field for [`LinearForm`](crate::LinearForm):
//!   exact rationals in practice, floats for quick numeric experiments.
//! * [`Coord`] is anything that can sit in a weight coordinate and be pushed
//!   through a simple reflection `c_i - c_j * A[j][i]`. Plain integers,
//!   scalars and linear forms all qualify.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient type of a [`LinearForm`](crate::LinearForm).
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + Send + Sync + 'static
{
    /// True when the value has no fractional part.
    fn is_integral(&self) -> bool;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 is representable in every scalar type")
    }

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }
}

impl Scalar for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for Ratio<i64> {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Scalar for f64 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }
}

impl Scalar for f32 {
    fn is_integral(&self) -> bool {
        self.fract() == 0.0
    }
}

/// A weight coordinate: closed under integer-weighted sums.
pub trait Coord: Clone + Debug + PartialEq {
    fn is_zero_coord(&self) -> bool;

    /// `self + m * other`.
    fn add_scaled(&self, other: &Self, m: i64) -> Self;
}

macro_rules! int_coord {
    ($($t:ty),*) => {$(
        impl Coord for $t {
            fn is_zero_coord(&self) -> bool {
                *self == 0
            }

            fn add_scaled(&self, other: &Self, m: i64) -> Self {
                self + other * (m as $t)
            }
        }
    )*};
}

int_coord!(i32, i64, i128);

impl Coord for BigInt {
    fn is_zero_coord(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn add_scaled(&self, other: &Self, m: i64) -> Self {
        self + other * BigInt::from(m)
    }
}

macro_rules! scalar_coord {
    ($($t:ty),*) => {$(
        impl Coord for $t {
            fn is_zero_coord(&self) -> bool {
                num_traits::Zero::is_zero(self)
            }

            fn add_scaled(&self, other: &Self, m: i64) -> Self {
                self.clone() + other.clone() * <$t as Scalar>::from_int(m)
            }
        }
    )*};
}

scalar_coord!(BigRational, Ratio<i64>, f64, f32);
