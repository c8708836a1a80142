//! Scalar traits used by the linear algebra.
//!
//! All verified statements are rank statements, so everything downstream
//! only needs a field with a reliable zero test. Exact rationals are the
//! default; `f64`/`f32` are accepted with a tolerance-based zero test.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A commutative ring element usable in matrices.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> {}

/// A field with a zero test suitable for Gaussian elimination.
pub trait Field: Scalar {
    /// Whether the value should be treated as zero during elimination.
    fn is_negligible(&self) -> bool;

    /// Whether `self` is a strictly better pivot than `other`.
    fn better_pivot(&self, _other: &Self) -> bool {
        false
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Debug + Integer + Signed,
{
    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}

impl Field for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }

    fn better_pivot(&self, other: &Self) -> bool {
        self.abs() > other.abs()
    }
}

impl Field for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-5
    }

    fn better_pivot(&self, other: &Self) -> bool {
        self.abs() > other.abs()
    }
}
