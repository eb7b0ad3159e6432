//! Residual checks for the kernel-method identities behind the closed forms.

use num_rational::BigRational;
use serde::Serialize;

use super::closed::{closed_form_g_1y, lift, Y};
use super::gf::interval_series_in;
use super::poly::MPoly;
use super::ratfn::RatFn;
use super::ring::int;
use super::trunc::TruncSeries;
use super::{PolySeries, SeriesError};

type Q = BigRational;
type R3 = RatFn<Q, 3>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalyticResiduals {
    pub pol2_residual_zero: bool,
    pub q11_cubic_residual_zero: bool,
    pub invariant_ratio_zero: bool,
    pub decoupling_zero: bool,
}

impl CatalyticResiduals {
    pub fn all(&self) -> bool {
        self.pol2_residual_zero && self.q11_cubic_residual_zero && self.invariant_ratio_zero && self.decoupling_zero
    }
}

/// `Q(1,1) = G(1,1)/t` modulo `t^{order+1}`.
pub fn q11_series(order: usize) -> Result<TruncSeries<Q>, SeriesError> {
    interval_series_in::<Q>(order + 1).shift_down(1)
}

/// `Q(y,y) = G(1,y)/(t y)` modulo `t^{order+1}`.
pub fn qyy_series(order: usize) -> Result<PolySeries<Q>, SeriesError> {
    let g = closed_form_g_1y(order + 1)?.shift_down(1)?;
    let coeffs = g.coeffs().iter().map(|p| p.div_var_power(Y, 1)).collect::<Result<Vec<_>, _>>()?;
    Ok(PolySeries::new(coeffs, order))
}

fn pc(v: i64, order: usize) -> PolySeries<Q> {
    PolySeries::constant(MPoly::constant(int(v)), order)
}

/// `Pol2(q, q1, y, t)` as a series; zero when `q = Q(y,y)` and `q1 = Q(1,1)`.
pub fn pol2(q: &PolySeries<Q>, q1: &TruncSeries<Q>) -> PolySeries<Q> {
    let n = q.order().min(q1.order());
    let y = PolySeries::constant(MPoly::var(Y), n);
    let t = PolySeries::<Q>::t(n);
    let c = |v| pc(v, n);
    let ym1 = &y - &c(1);
    let ym2 = &y - &c(2);
    let quad = y.pow(2) * t.pow(2) * ym1.pow(2) * q.pow(2);
    let lin = (&y * &(&(&c(2) * &y.pow(2)) - &(&c(5) * &y) + c(1)) * t.clone() - &ym1 * &ym2) * q.truncate(n);
    quad + lin + c(2) * t * lift(q1) + ym1 * ym2
}

/// The cubic satisfied by `Q(1,1)`, evaluated at `q`.
pub fn q11_cubic(q: &TruncSeries<Q>) -> TruncSeries<Q> {
    let n = q.order();
    let t = TruncSeries::<Q>::t(n);
    let poly_t = |c: &[i64]| t.eval_poly(&c.iter().map(|&v| int(v)).collect::<Vec<Q>>());
    &(&(&(&poly_t(&[0, 0, 0, 0, 0, 0, 64]) * &q.pow(3)) + &(&poly_t(&[0, 0, 0, -16, -288, 176]) * &q.pow(2)))
        + &(&poly_t(&[1, -28, 238, -452, 161]) * q))
        + &poly_t(&[-1, 25, -167, 49])
}

fn rc(v: i64) -> R3 {
    R3::constant(int(v))
}

fn vars() -> (R3, R3, R3) {
    (R3::var(0), R3::var(1), R3::var(2))
}

/// The kernel `K(x,y)` in `Q(x,y,t)`.
pub fn kernel() -> R3 {
    let (x, y, t) = vars();
    let txy2 = &(&t * &x) * &y.pow(2);
    &(&rc(1) - &(&t * &x)) - &(&txy2 / &(&(&x - &y) * &(&y - &rc(1))))
}

/// `(I0(x) - J0(y)) / K(x,y)` against its factorised form.
pub fn invariant_ratio_identity() -> bool {
    let (x, y, t) = vars();
    let one = rc(1);
    let tx = &t * &x;
    let i0 = &(&(&(&(&one / &(&one - &tx)) - &(&one / &(&tx * &x))) + &(&(&one + &t) / &tx))
        + &(&x * &(&one - &t)))
        - &(&tx * &x);
    let ym1 = &y - &one;
    let j0 = &(&(&(&(-(&t / &ym1.pow(2))) + &(&(&one - &t) / &ym1)) - &(&one / &(&t * &y.pow(2))))
        + &(&(&one + &t) / &(&y * &t)))
        + &y;
    let lhs = &(&i0 - &j0) / &kernel();
    let xy = &x * &y;
    let num = (&x - &y)
        * (&(&one - &y) + &(&tx * &y))
        * (&(&(&x + &y) - &xy) - &(&(&xy * &t) * &(&(&one + &x) - &xy)));
    let den = &(&(&(&x.pow(2) * &y.pow(2)) * &t) * &(&tx - &one)) * &ym1;
    lhs == &num / &den
}

/// The additive decoupling identity.
pub fn decoupling_identity() -> bool {
    let (x, y, t) = vars();
    let one = rc(1);
    let tx = &t * &x;
    let t2 = t.pow(2);
    let a = &(&(&(&rc(2) + &x) / &t) + &(&one / &(&t2 * &x))) + &(&one / &(&t * &(&tx - &one)));
    let b = &(&(-(&y / &t)) + &(&one / &(&t * &(&y - &one)))) - &(&one / &(&t2 * &y));
    let lhs = &(&x * &(&y - &one)) / &(&one - &tx);
    let k_term = &kernel() * &(&(&(&x - &y) * &(&one - &(&tx * &y))) / &(&(&(&x * &y) * &t2) * &(&one - &tx)));
    lhs == &(&a + &b) + &k_term
}

/// Runs all four checks; the series ones modulo `t^{order+1}`.
pub fn catalytic_residuals(order: usize) -> Result<CatalyticResiduals, SeriesError> {
    let q1 = q11_series(order)?;
    let q = qyy_series(order)?;
    Ok(CatalyticResiduals {
        pol2_residual_zero: pol2(&q, &q1).is_zero(),
        q11_cubic_residual_zero: q11_cubic(&q1).is_zero(),
        invariant_ratio_zero: invariant_ratio_identity(),
        decoupling_zero: decoupling_identity(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residuals_vanish() {
        let r = catalytic_residuals(12).unwrap();
        assert!(r.all(), "{r:?}");
    }

    #[test]
    fn perturbations_are_detected() {
        let n = 8;
        let mut q1 = q11_series(n).unwrap().coeffs().to_vec();
        q1[5] = &q1[5] + int::<Q>(1);
        let q1 = TruncSeries::new(q1, n);
        assert!(!q11_cubic(&q1).is_zero());
        assert!(!pol2(&qyy_series(n).unwrap(), &q1).is_zero());
    }

    #[test]
    fn q11_closed_form() {
        // Q(1,1) = (1+Z)(1+2Z)^2(1-2Z+2Z^3)
        let n = 10;
        let z = super::super::gf::solve_Z(n);
        let one = TruncSeries::one(n);
        let two_z = z.scale(&int(2));
        let f = &(&(&one + &z) * &(&one + &two_z).pow(2)) * &z.eval_poly(&[int(1), int(-2), int(0), int(2)]);
        assert_eq!(f, q11_series(n).unwrap());
    }
}
