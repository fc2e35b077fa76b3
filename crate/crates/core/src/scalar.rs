//! Integer scalar abstraction used by the matrix layer.
//!
//! Every algorithm in [`crate::intmat`] is written once against
//! [`IntScalar`]. `BigInt` is the instantiation the rest of the crate uses,
//! since normal-form transforms can grow without bound. The fixed-width
//! instantiations (`i64`, `i128`) are there for small inputs and for
//! cross-checking; they panic on overflow in debug builds.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// An exact signed integer type with Euclidean division.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + ToBigInt + FromPrimitive + Send + Sync + 'static
{
    /// Lossless conversion from a small integer.
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("i64 fits every supported scalar")
    }

    fn to_big(&self) -> BigInt {
        self.to_bigint().expect("integer scalars always convert to BigInt")
    }
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + ToBigInt + FromPrimitive + Send + Sync + 'static
{
}
