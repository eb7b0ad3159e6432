//! Algebraic closed forms of the refined series, expanded in `t`.
//!
//! Each form is `(N0 - N1 sqrt(D)) / den` with `N0`, `N1`, `D` polynomial in
//! `Z` and one catalytic variable; the division by `den` is done exactly.

use std::ops::AddAssign;

use num_rational::BigRational;

use super::gf::solve_z_in;
use super::poly::MPoly;
use super::ring::{int, Field};
use super::trunc::TruncSeries;
use super::{PolySeries, SeriesError};

pub(crate) const X: usize = 0;
pub(crate) const Y: usize = 1;

/// Builds polynomials in `Z` and one variable as series in `t`.
pub(crate) struct ZBuilder<C: Field + AddAssign> {
    z: TruncSeries<C>,
    zpow: Vec<PolySeries<C>>,
    order: usize,
}

impl<C: Field + AddAssign> ZBuilder<C> {
    pub fn new(order: usize) -> Self {
        let z = solve_z_in::<C>(order);
        let lz = lift(&z);
        let mut zpow = vec![PolySeries::one(order)];
        for k in 1..=10 {
            let next = &zpow[k - 1] * &lz;
            zpow.push(next);
        }
        ZBuilder { z, zpow, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `c_0 + c_1 Z + c_2 Z^2 + ...`
    pub fn zq(&self, c: &[i64]) -> PolySeries<C> {
        let mut out = PolySeries::zero(self.order);
        for (k, &v) in c.iter().enumerate() {
            if v != 0 {
                out = &out + &self.zpow[k].map(|p| p.scale(&int(v)));
            }
        }
        out
    }

    /// The monomial `v^k` in variable `var`.
    pub fn var(&self, var: usize, k: u32) -> PolySeries<C> {
        let mut e = [0; 2];
        e[var] = k;
        PolySeries::constant(MPoly::monomial(e, C::one()), self.order)
    }

    pub fn constant(&self, c: i64) -> PolySeries<C> {
        PolySeries::constant(MPoly::constant(int(c)), self.order)
    }

    /// Exact division of `num` by `Z^k`, given that it vanishes to order `k`.
    pub fn div_z_power(&self, num: &PolySeries<C>, k: usize) -> Result<PolySeries<C>, SeriesError> {
        let q = num.shift_down(k)?;
        let zt = lift(&self.z.shift_down(1)?);
        q.div(&zt.pow(k as u32))
    }
}

pub(crate) fn lift<C: Field + AddAssign>(s: &TruncSeries<C>) -> PolySeries<C> {
    s.map(|c| MPoly::constant(c.clone()))
}

fn map_coeffs_exact<C: Field + AddAssign>(
    s: &PolySeries<C>,
    f: impl Fn(&MPoly<C, 2>) -> Result<MPoly<C, 2>, SeriesError>,
) -> Result<PolySeries<C>, SeriesError> {
    let coeffs = s.coeffs().iter().map(f).collect::<Result<Vec<_>, _>>()?;
    Ok(PolySeries::new(coeffs, s.order()))
}

/// `G'(x, 1)`, first ascent of the lower path, modulo `t^{order+1}`.
pub fn closed_form_gp_x1_in<C: Field + AddAssign>(order: usize) -> Result<PolySeries<C>, SeriesError> {
    let b = ZBuilder::<C>::new(order + 2);
    let x = |k| b.var(X, k);
    let delta = b.zq(&[1, 1]).pow(2) * b.zq(&[1, 2]).pow(2)
        - b.zq(&[0, 2]) * b.zq(&[1, 1]) * b.zq(&[1, 4, 2]) * x(1)
        + b.zq(&[0, 0, 1]) * x(2);
    let c1 = (b.zq(&[1, 2]).pow(2) - b.zq(&[0, 0, 2]) * x(1) - b.zq(&[0, 1]) * x(2))
        * (b.zq(&[1, 1]) * b.zq(&[1, 2]) - b.zq(&[2, 2]) * b.zq(&[1, 1]) * x(1) + x(2));
    let c0 = b.zq(&[1, 1]).pow(2) * b.zq(&[1, 2]).pow(4)
        - b.zq(&[1, 1]) * b.zq(&[1, 2]).pow(2) * b.zq(&[2, 9, 16, 8]) * x(1)
        + b.zq(&[1, 1]) * b.zq(&[1, 7, 25, 48, 46, 18]) * x(2)
        - b.zq(&[0, -1, -3, -7, -6, 0, 2]) * x(3)
        - b.zq(&[0, 1, 1]) * b.zq(&[1, 2]).pow(2) * x(4)
        + b.zq(&[0, 0, 1]) * x(5);
    let num = c0 - c1 * delta.sqrt()?;
    let q = b.div_z_power(&num, 2)?;
    let half: C = int::<C>(1) / int(2);
    map_coeffs_exact(&q, |p| Ok(p.div_var_power(X, 3)?.div_linear(X, &C::one())?.scale(&-half.clone())))
}

/// `G(x, 1)`, final descent of the lower path, modulo `t^{order+1}`.
pub fn closed_form_g_x1_in<C: Field + AddAssign>(order: usize) -> Result<PolySeries<C>, SeriesError> {
    let b = ZBuilder::<C>::new(order + 2);
    let x = |k| b.var(X, k);
    let delta = (b.zq(&[1, 1]) - b.zq(&[0, 1]) * x(1))
        * (b.zq(&[1, 2]).pow(2) * b.zq(&[1, 1]) - b.zq(&[0, 1]) * x(1));
    let c1 = (x(1) - b.constant(1))
        * (b.zq(&[1, 2]).pow(2) - b.zq(&[0, 2]) * x(1))
        * (b.zq(&[2, 2]) * b.zq(&[1, 2]) - x(1));
    let c0 = b.zq(&[-2]) * b.zq(&[1, 1]).pow(2) * b.zq(&[1, 2]).pow(4)
        + b.zq(&[3]) * b.zq(&[1, 1]) * b.zq(&[1, 2]).pow(2) * b.zq(&[1, 6, 8, 4]) * x(1)
        - b.zq(&[1, 16, 70, 134, 132, 64, 12]) * x(2)
        + b.zq(&[0, 3, 16, 24, 12]) * x(3)
        - b.zq(&[0, 0, 2]) * x(4);
    let num = c0 - c1 * delta.sqrt()?;
    let q = b.div_z_power(&num, 2)?;
    let half: C = int::<C>(1) / int(2);
    map_coeffs_exact(&q, |p| Ok(p.div_var_power(X, 2)?.scale(&half)))
}

/// `G(1, y)`, final descent of the upper path, modulo `t^{order+1}`.
pub fn closed_form_g_1y_in<C: Field + AddAssign>(order: usize) -> Result<PolySeries<C>, SeriesError> {
    let b = ZBuilder::<C>::new(order + 1);
    let y = |k| b.var(Y, k);
    let delta = b.zq(&[1, 2]).pow(2) - b.zq(&[0, 4, 4]) * y(1);
    let d1 = (b.zq(&[1, 2]) - y(1)) * (b.zq(&[2, 2]) - b.zq(&[1, 2]) * y(1));
    let d0 = b.zq(&[0, -2]) * y(3) + b.zq(&[1, 10, 8, 4]) * y(2) - b.zq(&[3, 16, 24, 12]) * y(1)
        + b.zq(&[2]) * b.zq(&[1, 2]).pow(2) * b.zq(&[1, 1]);
    let num = d0 - d1 * delta.sqrt()?;
    let q = b.div_z_power(&num, 1)?;
    let half: C = int::<C>(1) / int(2);
    let one = C::one();
    map_coeffs_exact(&q, |p| {
        Ok(p.div_var_power(Y, 1)?.div_linear(Y, &one)?.div_linear(Y, &one)?.scale(&half))
    })
}

pub fn closed_form_gp_x1(order: usize) -> Result<PolySeries<BigRational>, SeriesError> {
    closed_form_gp_x1_in(order)
}

pub fn closed_form_g_x1(order: usize) -> Result<PolySeries<BigRational>, SeriesError> {
    closed_form_g_x1_in(order)
}

pub fn closed_form_g_1y(order: usize) -> Result<PolySeries<BigRational>, SeriesError> {
    closed_form_g_1y_in(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::PathFamily;
    use crate::series::feq::functional_equation_expand;

    fn marginal(s: &PolySeries<BigRational>, var: usize) -> PolySeries<BigRational> {
        s.map(|p| p.subst(var, &int(1)))
    }

    #[test]
    fn gp_x1_matches_iteration() {
        let n = 8;
        let g = functional_equation_expand(&PathFamily::mirrored(1), n).unwrap();
        let c = closed_form_gp_x1(n).unwrap();
        assert_eq!(c, marginal(&g, Y));
        // symmetric in the two catalytic variables
        let swapped = marginal(&g, X).map(|p| p.map_monomials(|[_, j]| [j, 0]));
        assert_eq!(c, swapped);
    }

    #[test]
    fn g_x1_and_g_1y_match_iteration() {
        let n = 8;
        let g = functional_equation_expand(&PathFamily::plain(), n).unwrap();
        assert_eq!(closed_form_g_x1(n).unwrap(), marginal(&g, Y));
        assert_eq!(closed_form_g_1y(n).unwrap(), marginal(&g, X));
    }

    #[test]
    fn float_closed_form() {
        let c = closed_form_g_x1_in::<f64>(5).unwrap();
        let total: f64 = c.coeffs()[5].eval(&[1.0, 1.0]);
        assert!((total - 417.0).abs() < 1e-6, "{total}");
    }
}
