//! Power series in `t` truncated at a fixed order.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::ring::Ring;
use super::SeriesError;

/// `c_0 + c_1 t + ... + c_N t^N`, with all arithmetic done modulo `t^{N+1}`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Pads with zeros or truncates to order `order`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        Self::new(vec![C::zero(), C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    pub fn map<D: Ring, F: Fn(&C) -> D>(&self, f: F) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Multiplication by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs, self.order())
    }

    /// Exact division by `t^k`; the order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::DivisionFailure(format!("series is not divisible by t^{k}")));
        }
        Ok(TruncSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(SeriesError::NonInvertibleConstant)?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * out[k - j].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Square root with constant term 1 of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::BadSqrtConstant);
        }
        let half = (C::one() + C::one()).unit_inverse().ok_or(SeriesError::BadSqrtConstant)?;
        let n = self.order();
        let mut s: Vec<C> = vec![C::one()];
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc - s[j].clone() * s[k - j].clone();
            }
            s.push(acc * half.clone());
        }
        Ok(TruncSeries { coeffs: s })
    }

    /// `self(inner(t))`, for `inner` with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut out = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            out = &(&out * &inner) + &Self::constant(c.clone(), order);
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Evaluates a polynomial with constant coefficients at this series.
    pub fn eval_poly(&self, coeffs: &[C]) -> Self {
        let mut out = Self::zero(self.order());
        for c in coeffs.iter().rev() {
            out = &(&out * self) + &Self::constant(c.clone(), self.order());
        }
        out
    }
}

impl<'a, C: Ring> Add<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn add(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone()).collect(),
        }
    }
}

impl<'a, C: Ring> Sub<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn sub(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        let n = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| self.coeffs[i].clone() - rhs.coeffs[i].clone()).collect(),
        }
    }
}

impl<'a, C: Ring> Mul<&'a TruncSeries<C>> for &'a TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn mul(self, rhs: &TruncSeries<C>) -> TruncSeries<C> {
        let n = self.order().min(rhs.order());
        let lo_a = self.valuation().unwrap_or(n + 1);
        let lo_b = rhs.valuation().unwrap_or(n + 1);
        let mut coeffs = vec![C::zero(); n + 1];
        for i in lo_a..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in lo_b..=n - i {
                if !rhs.coeffs[j].is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + self.coeffs[i].clone() * rhs.coeffs[j].clone();
                }
            }
        }
        TruncSeries { coeffs }
    }
}

impl<C: Ring> Neg for TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

macro_rules! owned {
    ($tr:ident, $m:ident) => {
        impl<C: Ring> $tr for TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $m(self, rhs: TruncSeries<C>) -> TruncSeries<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned!(Add, add);
owned!(Sub, sub);
owned!(Mul, mul);
