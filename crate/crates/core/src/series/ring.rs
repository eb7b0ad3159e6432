use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Commutative ring with identity, as needed by series and polynomial arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
}

/// A ring in which every nonzero element is a unit and small integers embed.
pub trait Field: Ring + Div<Output = Self> + FromPrimitive {}

impl<T> Field for T where T: Ring + Div<Output = T> + FromPrimitive {}

macro_rules! float_ring {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn unit_inverse(&self) -> Option<Self> {
                (*self != 0.0).then(|| 1.0 / *self)
            }
        }
    )*};
}

float_ring!(f32, f64);

impl<T> Ring for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Send + Sync,
{
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Ring for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Ring for i64 {
    fn unit_inverse(&self) -> Option<Self> {
        (self.abs() == 1).then_some(*self)
    }
}

/// Embeds a small integer into any field.
pub fn int<C: Field>(v: i64) -> C {
    C::from_i64(v).expect("small integers embed in every field")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn units() {
        assert_eq!(2.0f64.unit_inverse(), Some(0.5));
        assert_eq!(0.0f32.unit_inverse(), None);
        let half: BigRational = int(2);
        assert_eq!(half.unit_inverse(), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(BigInt::from(-1).unit_inverse(), Some(BigInt::from(-1)));
        assert_eq!(BigInt::from(2).unit_inverse(), None);
        assert_eq!(3i64.unit_inverse(), None);
    }
}
