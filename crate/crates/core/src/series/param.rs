//! Rational parametrisations of the refined series by auxiliary series
//! `U(x)` and `V(y)`, used as a cross-check of the radical closed forms.

use num_rational::BigRational;
use serde::Serialize;

use super::closed::{closed_form_g_1y, closed_form_g_x1, closed_form_gp_x1, ZBuilder, X, Y};
use super::{PolySeries, SeriesError};

type Q = BigRational;
type PS = PolySeries<Q>;

/// Iterates `s <- f(s)` from zero; each pass fixes one more order in `t`.
fn fixed_point(order: usize, mut f: impl FnMut(&PS) -> PS) -> PS {
    let mut s = PS::zero(order);
    for _ in 0..order {
        s = f(&s);
    }
    s
}

/// `sum_k poly_k(Z) s^k`.
fn zpoly_in(b: &ZBuilder<Q>, s: &PS, rows: &[PS]) -> PS {
    let mut out = PS::zero(b.order());
    for r in rows.iter().rev() {
        out = &(&out * s) + r;
    }
    out
}

/// `G'(x,1)` from `U = t x (1+U)(1 + 3Z + Z^2 + Z(1+Z) U)`.
pub fn param_gp_x1(order: usize) -> Result<PS, SeriesError> {
    let b = ZBuilder::<Q>::new(order);
    let t = PS::t(order);
    let x = b.var(X, 1);
    let one = b.constant(1);
    let u = fixed_point(order, |u| {
        &(&(&t * &x) * &(&one + u)) * &(&b.zq(&[1, 3, 1]) + &(&b.zq(&[0, 1, 1]) * u))
    });
    let p = zpoly_in(
        &b,
        &u,
        &[
            b.zq(&[1, 3, 1]) * b.zq(&[1, 6, 9, -7, -19, 10, 31, 15, 1]),
            b.zq(&[0, 0, -4, -31, -80, -48, 120, 221, 140, 35, 2]),
            b.zq(&[0, 0, 0, 1, 1]) * b.zq(&[-1, 0, 24, 62, 49, 13]),
            b.zq(&[0, 0, 0, 0, 0, -1]) * b.zq(&[1, 1]).pow(2) * b.zq(&[-2, -4, 3, 2]),
            b.zq(&[0, 0, 0, 0, 0, 0, 0, -1]) * b.zq(&[1, 1]).pow(3),
        ],
    );
    let den = b.zq(&[1, 2]).pow(2) * (b.zq(&[1, 3, 1]) - b.zq(&[0, 0, 1]) * u.clone());
    (t * x * (one + u) * p).div(&den)
}

/// `G(x,1)` from `U = x Z (1+U) / ((1+Z)(1 + 2Z - Z^2 U))`, with the
/// numerator polynomial `P` taken with either sign.
pub fn param_g_x1(order: usize, negate_p: bool) -> Result<PS, SeriesError> {
    let b = ZBuilder::<Q>::new(order);
    let x = b.var(X, 1);
    let one = b.constant(1);
    let mut err = None;
    let u = fixed_point(order, |u| {
        let den = b.zq(&[1, 1]) * (b.zq(&[1, 2]) - &b.zq(&[0, 0, 1]) * u);
        let num = &(&x * &b.zq(&[0, 1])) * &(&one + u);
        num.div(&den).unwrap_or_else(|e| {
            err = Some(e);
            PS::zero(order)
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    let sign = if negate_p { -1 } else { 1 };
    let p = zpoly_in(
        &b,
        &u,
        &[
            b.zq(&[-sign]) * b.zq(&[1, 2]) * b.zq(&[1, 1, -3, -2, 4, 4]),
            b.zq(&[0, 0, 4 * sign, 9 * sign, -5 * sign, -20 * sign, -6 * sign, 6 * sign]),
            b.zq(&[0, 0, 0, 0, -5 * sign, -8 * sign, 4 * sign, 8 * sign]),
            b.zq(&[0, 0, 0, 0, 0, 0, 2 * sign, 2 * sign]),
        ],
    );
    let den = (b.zq(&[1, 2]) - b.zq(&[0, 0, 1]) * u.clone()).pow(2);
    (u * b.zq(&[1, 1]) * p).div(&den)
}

/// `G(1,y)` from `V = y Z (1+Z)(1+V)^2 / (1+2Z)^2`.
pub fn param_g_1y(order: usize) -> Result<PS, SeriesError> {
    let b = ZBuilder::<Q>::new(order);
    let y = b.var(Y, 1);
    let one = b.constant(1);
    let inv = b.zq(&[1, 2]).pow(2).inverse()?;
    let coef = &(&(&y * &b.zq(&[0, 1, 1])) * &inv);
    let v = fixed_point(order, |v| coef * &(&one + v).pow(2));
    let num = zpoly_in(
        &b,
        &v,
        &[
            b.zq(&[1, 1]) * b.zq(&[1, 0, -2, 2]),
            b.zq(&[0, -3, -4, 4, 4]),
            b.zq(&[0, 0, 2]) * b.zq(&[1, 1]).pow(2),
        ],
    );
    let den = (b.zq(&[1, 1]) - b.zq(&[0, 1]) * v.clone()).pow(2);
    (v * num).div(&den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamChecks {
    pub gp_x1: bool,
    /// `G(x,1)` agrees using `+P`.
    pub g_x1_plus_p: bool,
    /// `G(x,1)` agrees using `-P`.
    pub g_x1_minus_p: bool,
    pub g_1y: bool,
}

/// Compares each parametrisation with the radical closed form modulo `t^{order+1}`.
pub fn parametrization_checks(order: usize) -> Result<ParamChecks, SeriesError> {
    let gx = closed_form_g_x1(order)?;
    Ok(ParamChecks {
        gp_x1: param_gp_x1(order)? == closed_form_gp_x1(order)?,
        g_x1_plus_p: param_g_x1(order, false)? == gx,
        g_x1_minus_p: param_g_x1(order, true)? == gx,
        g_1y: param_g_1y(order)? == closed_form_g_1y(order)?,
    })
}
