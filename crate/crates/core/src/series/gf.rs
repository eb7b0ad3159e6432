//! The counting series of intervals of Dyck paths.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::ring::{int, Field};
use super::trunc::TruncSeries;
use super::SeriesError;

/// The series `Z = t (1 + Z) (1 + 2Z)^2` with zero constant term, modulo `t^{order+1}`.
///
/// This is the fixed point of `Z <- t (1 + 5Z + 8Z^2 + 4Z^3)` evaluated one
/// coefficient per pass: the coefficient of `t^k` only involves those of
/// `t^1 .. t^{k-1}`, so the powers of `Z` are extended incrementally.
pub fn solve_z_in<C: Field>(order: usize) -> TruncSeries<C> {
    let mut z = vec![C::zero(); order + 1];
    let mut z2 = vec![C::zero(); order + 1];
    let mut z3 = vec![C::zero(); order + 1];
    let conv = |a: &[C], b: &[C], k: usize| {
        (1..k).fold(C::zero(), |acc, i| acc + a[i].clone() * b[k - i].clone())
    };
    for k in 1..=order {
        let j = k - 1;
        if j >= 1 {
            z2[j] = conv(&z, &z, j);
            z3[j] = conv(&z, &z2, j);
        }
        let base = if j == 0 { C::one() } else { C::zero() };
        z[k] = base + int::<C>(5) * z[j].clone() + int::<C>(8) * z2[j].clone() + int::<C>(4) * z3[j].clone();
    }
    TruncSeries::new(z, order)
}

#[allow(non_snake_case)]
pub fn solve_Z(order: usize) -> TruncSeries<BigRational> {
    solve_z_in(order)
}

/// `Z (1 - 2Z + 2Z^3)`, the generating function of intervals by size.
pub fn interval_series_in<C: Field>(order: usize) -> TruncSeries<C> {
    let z = solve_z_in::<C>(order);
    &z * &z.eval_poly(&[int(1), int(-2), int(0), int(2)])
}

/// Interval counts `g(1), ..., g(n)` read off the closed form.
pub fn gf_counts(n: usize) -> Result<Vec<BigUint>, SeriesError> {
    let g = interval_series_in::<BigRational>(n);
    (1..=n)
        .map(|k| {
            let c = g.coeff(k);
            if !c.is_integer() || c.is_negative() {
                return Err(SeriesError::NonIntegerCoefficient(k));
            }
            Ok(c.to_integer().to_biguint().expect("nonnegative"))
        })
        .collect()
}

/// Checks `(n+4)(2n+7) g(n+2) = 2(11n^2+44n+42) g(n+1) + n(2n+1) g(n)` for
/// every `n` covered by `gs = [g(1), g(2), ...]`.
pub fn recurrence_check(gs: &[BigUint]) -> bool {
    if gs.len() < 3 {
        return false;
    }
    (1..=gs.len() - 2).all(|n| {
        let g = |k: usize| BigInt::from(gs[k - 1].clone());
        let n_ = BigInt::from(n);
        let lhs: BigInt = (&n_ + 4) * (2 * &n_ + 7) * g(n + 2);
        let rhs: BigInt = 2 * (11 * &n_ * &n_ + 44 * &n_ + 42) * g(n + 1) + &n_ * (2 * &n_ + 1) * g(n);
        (lhs - rhs).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn z_coefficients() {
        let z = solve_Z(10);
        assert_eq!(z.coeff(0), int(0));
        assert_eq!(z.coeff(1), int(1));
        assert_eq!(z.coeff(2), int(5));
        let one = TruncSeries::one(10);
        let two_z = z.scale(&int(2));
        let rhs = &TruncSeries::t(10) * &(&(&one + &z) * &(&(&one + &two_z) * &(&one + &two_z)));
        assert!((&z - &rhs).is_zero());
    }

    #[test]
    fn counts() {
        assert_eq!(gf_counts(4).unwrap(), big(&[1, 3, 13, 69]));
        let f: TruncSeries<f64> = interval_series_in(4);
        assert!((f.coeff(4) - 69.0).abs() < 1e-9);
    }

    #[test]
    fn recurrence() {
        assert!(recurrence_check(&big(&[1, 3, 13])));
        assert!(recurrence_check(&big(&[1, 3, 13, 69])));
        assert!(!recurrence_check(&big(&[1, 3, 14])));
        assert!(!recurrence_check(&big(&[1, 3])));
        assert!(recurrence_check(&gf_counts(30).unwrap()));
    }
}
