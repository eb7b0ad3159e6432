//! Bivariate generating functions of intervals, by iterating their
//! functional equations one order of `t` at a time.

use std::ops::AddAssign;

use num_rational::BigRational;

use super::poly::MPoly;
use super::ring::{int, Field};
use super::{PolySeries, SeriesError};
use crate::paths::PathFamily;

const X: usize = 0;
const Y: usize = 1;

type P<C> = MPoly<C, 2>;

fn monomial<C: Field + AddAssign>(a: u32, b: u32) -> P<C> {
    P::monomial([a, b], C::one())
}

/// Coefficient of `t^n` from that of `t^(n-1)`, for the final-descent series.
fn step_final_descents<C: Field + AddAssign>(p: &P<C>, m: u32, first: bool) -> Result<P<C>, SeriesError> {
    let one: C = C::one();
    let a = (p - &p.subst(X, &one)).div_linear(X, &one)?;
    // q(z) = (p(z,1) - p(1,1)) / (z - 1), then B = q(xy)
    let p_x1 = p.subst(Y, &one);
    let q = (&p_x1 - &p_x1.subst(X, &one)).div_linear(X, &one)?;
    let b = q.map_monomials(|[i, _]| [i, i]);
    let n = (&(&a * &P::var(Y)) - &b).div_linear(Y, &one)?;
    let mut inner = p + &n;
    if first {
        inner = &inner + &P::one();
    }
    Ok(&monomial(m, m) * &inner)
}

/// Same, for the series by first ascent and the statistic `r`.
fn step_first_ascent<C: Field + AddAssign>(p: &P<C>, m: u32, first: bool) -> Result<P<C>, SeriesError> {
    let one: C = C::one();
    let a = (p - &p.subst(X, &one)).div_linear(X, &one)?;
    let t1 = (p - &p.subst(Y, &one)).div_linear(Y, &one)?;
    let t2 = (&(&P::var(Y) * &a) - &a.subst(Y, &one)).div_linear(Y, &one)?;
    let mut inner = &t1 + &t2;
    if first {
        inner = &inner + &P::one();
    }
    Ok(&monomial(m, 1) * &inner)
}

pub fn functional_equation_expand_in<C: Field + AddAssign>(
    f: &PathFamily,
    order: usize,
) -> Result<PolySeries<C>, SeriesError> {
    let m = f.m() as u32;
    let mut coeffs = vec![P::zero()];
    for n in 1..=order {
        let prev = &coeffs[n - 1];
        let next = if f.is_mirrored() {
            step_first_ascent(prev, m, n == 1)?
        } else {
            step_final_descents(prev, m, n == 1)?
        };
        coeffs.push(next);
    }
    Ok(PolySeries::new(coeffs, order))
}

/// `G_m(t; x, y)` (final descents) or `G'_m(t; x, y)` (first ascent, `r`)
/// modulo `t^{order+1}`.
pub fn functional_equation_expand(f: &PathFamily, order: usize) -> Result<PolySeries<BigRational>, SeriesError> {
    functional_equation_expand_in(f, order)
}

/// Sum of all coefficients of each `t^n`, i.e. the series at `x = y = 1`.
pub fn at_one<C: Field + AddAssign>(s: &PolySeries<C>) -> Vec<C> {
    s.coeffs().iter().map(|p| p.eval(&[int(1), int(1)])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::gt_count_refined;

    fn poly(terms: &[([u32; 2], i64)]) -> P<BigRational> {
        P::from_terms(terms.iter().map(|(e, c)| (*e, int(*c))))
    }

    #[test]
    fn low_order_coefficients() {
        let g = functional_equation_expand(&PathFamily::plain(), 3).unwrap();
        assert_eq!(g.coeff(1), poly(&[([1, 1], 1)]));
        assert_eq!(g.coeff(2), poly(&[([2, 2], 1), ([1, 2], 1), ([1, 1], 1)]));
        // xy(x^2y^2 + 2xy^2 + 2xy + 2y^2 + 3y + 3)
        assert_eq!(
            g.coeff(3),
            poly(&[([3, 3], 1), ([2, 3], 2), ([2, 2], 2), ([1, 3], 2), ([1, 2], 3), ([1, 1], 3)])
        );
        let g = functional_equation_expand(&PathFamily::mirrored(1), 3).unwrap();
        // xy(x^2 + 2xy + y^2 + 3x + 3y + 3)
        assert_eq!(
            g.coeff(3),
            poly(&[([3, 1], 1), ([2, 2], 2), ([1, 3], 1), ([2, 1], 3), ([1, 2], 3), ([1, 1], 3)])
        );
        let g = functional_equation_expand(&PathFamily::mdyck(2), 3).unwrap();
        assert_eq!(at_one(&g), vec![int(0), int(1), int(6), int(62)]);
        let g = functional_equation_expand(&PathFamily::mirrored(2), 3).unwrap();
        assert_eq!(at_one(&g), vec![int(0), int(1), int(5), int(40)]);
    }

    #[test]
    fn matches_generating_tree() {
        for f in [PathFamily::plain(), PathFamily::mdyck(2), PathFamily::mirrored(1), PathFamily::mirrored(2)] {
            let g = functional_equation_expand(&f, 6).unwrap();
            for n in 1..=6 {
                let refined = gt_count_refined(&f, n).unwrap().map_coeffs(|c| BigRational::from_integer(c.clone().into()));
                assert_eq!(g.coeff(n), refined, "{f} n={n}");
            }
        }
    }

    #[test]
    fn float_iteration() {
        let g = functional_equation_expand_in::<f64>(&PathFamily::plain(), 5).unwrap();
        assert_eq!(at_one(&g)[5], 417.0);
    }
}
