//! Rational functions as unreduced fractions of polynomials, enough to test
//! identities by cross-multiplication.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use super::poly::MPoly;
use super::ring::Ring;

#[derive(Clone, Debug)]
pub struct RatFn<C, const V: usize> {
    num: MPoly<C, V>,
    den: MPoly<C, V>,
}

impl<C: Ring + AddAssign, const V: usize> RatFn<C, V> {
    /// # Panics
    ///
    /// If `den` is the zero polynomial.
    pub fn new(num: MPoly<C, V>, den: MPoly<C, V>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }
    }

    pub fn poly(p: MPoly<C, V>) -> Self {
        RatFn { num: p, den: MPoly::one() }
    }

    pub fn constant(c: C) -> Self {
        Self::poly(MPoly::constant(c))
    }

    pub fn var(k: usize) -> Self {
        Self::poly(MPoly::var(k))
    }

    pub fn num(&self) -> &MPoly<C, V> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<C, V> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        RatFn { num: self.num.pow(k), den: self.den.pow(k) }
    }
}

impl<C: Ring + AddAssign, const V: usize> PartialEq for RatFn<C, V> {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl<'a, C: Ring + AddAssign, const V: usize> Add<&'a RatFn<C, V>> for &'a RatFn<C, V> {
    type Output = RatFn<C, V>;
    fn add(self, rhs: &RatFn<C, V>) -> RatFn<C, V> {
        if self.den == rhs.den {
            return RatFn { num: &self.num + &rhs.num, den: self.den.clone() };
        }
        RatFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl<'a, C: Ring + AddAssign, const V: usize> Sub<&'a RatFn<C, V>> for &'a RatFn<C, V> {
    type Output = RatFn<C, V>;
    fn sub(self, rhs: &RatFn<C, V>) -> RatFn<C, V> {
        self + &(-rhs.clone())
    }
}

impl<'a, C: Ring + AddAssign, const V: usize> Mul<&'a RatFn<C, V>> for &'a RatFn<C, V> {
    type Output = RatFn<C, V>;
    fn mul(self, rhs: &RatFn<C, V>) -> RatFn<C, V> {
        RatFn { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl<'a, C: Ring + AddAssign, const V: usize> Div<&'a RatFn<C, V>> for &'a RatFn<C, V> {
    type Output = RatFn<C, V>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RatFn<C, V>) -> RatFn<C, V> {
        self * &rhs.recip()
    }
}

impl<C: Ring + AddAssign, const V: usize> Neg for RatFn<C, V> {
    type Output = RatFn<C, V>;
    fn neg(self) -> RatFn<C, V> {
        RatFn { num: -self.num, den: self.den }
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl<C: Ring + AddAssign, const V: usize> $tr for RatFn<C, V> {
            type Output = RatFn<C, V>;
            fn $m(self, rhs: RatFn<C, V>) -> RatFn<C, V> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ring::int;
    use num_rational::BigRational;

    type R = RatFn<BigRational, 2>;

    fn c(v: i64) -> R {
        R::constant(int(v))
    }

    #[test]
    fn partial_fractions() {
        let x = R::var(0);
        // 1/(x-1) - 1/x = 1/(x(x-1))
        let lhs = &(&c(1) / &(&x - &c(1))) - &(&c(1) / &x);
        let rhs = &c(1) / &(&x * &(&x - &c(1)));
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
        assert_ne!(lhs, c(0));
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn division_by_zero_panics() {
        let _ = c(1) / c(0);
    }
}
