//! Growth constants of interval counts, from the critical point of the step
//! generating function, and empirical fits against exact counts.

use num_bigint::BigUint;
use num_traits::{Float, FloatConst, ToPrimitive};
use serde::Serialize;

use super::gf::gf_counts;
use super::SeriesError;
use crate::counting::gt_counts;
use crate::paths::{FamilyKind, PathFamily};

/// `g(n) ~ kappa mu^n n^alpha`, with `c` the correlation coefficient at the
/// critical point `(x0, y0)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Asymptotics<F> {
    pub mu: F,
    pub c: F,
    pub alpha: F,
    pub x0: F,
    pub y0: F,
}

fn lit<F: Float>(v: f64) -> F {
    F::from(v).expect("float literal")
}

/// The step generating function of the walks counted by `f`.
pub fn step_gf<F: Float>(f: &PathFamily, x: F, y: F) -> F {
    let m = f.m() as i32;
    let one = F::one();
    if f.is_mirrored() {
        x.powi(m) * y * (x + y - one) / ((x - one) * (y - one))
    } else {
        x.powi(m) * (x * y - x + y) / ((x - y) * (y - one))
    }
}

pub fn asymptotics_in<F: Float + FloatConst>(f: &PathFamily) -> Asymptotics<F> {
    let m: F = lit(f.m() as f64);
    let one = F::one();
    let two: F = lit(2.0);
    let (x0, y0, mu, c) = if f.is_mirrored() {
        let r = (lit::<F>(4.0) * m * m + one).sqrt();
        let x0 = (two * m * m + one + r) / (two * m * m);
        let y0 = one + m * (x0 - one);
        assert!(x0 > one && y0 > one, "critical point outside the domain");
        let mu = (two * m + r) * ((one + r) / (two * m)).powf(two * m);
        let c = -((one + two * m * m - m * r) / (two * (lit::<F>(3.0) * m * m + one))).sqrt();
        (x0, y0, mu, c)
    } else {
        let r = (m * m + lit(4.0)).sqrt();
        let x0 = (two + r) / m;
        let y0 = m / two * (x0 - one);
        assert!(one < y0 && y0 < x0, "critical point outside the domain");
        let mu = (m * r + m * m + two) / two * x0.powf(m);
        let c = -((m * m + two - r) / (two * m * m + lit(6.0))).sqrt();
        (x0, y0, mu, c)
    };
    let alpha = -one - F::PI() / (-c).acos();
    Asymptotics { mu, c, alpha, x0, y0 }
}

pub fn asymptotics(f: &PathFamily) -> Asymptotics<f64> {
    asymptotics_in(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthFit {
    pub n_max: usize,
    pub mu_hat: f64,
    pub alpha_hat: f64,
    /// `g(n_max) / (mu^n n^alpha_hat)`, only a qualitative check.
    pub kappa_hat: f64,
}

fn ln_big(v: &BigUint) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(60);
    (v >> shift).to_f64().expect("fits in 60 bits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Second-order Richardson extrapolation of `s_k ~ L + a/k + b/k^2` at `k`,
/// from `s_k`, `s_{k+1}`, `s_{k+2}`.
fn richardson2(k: f64, s: [f64; 3]) -> f64 {
    (k * k * s[0] - 2.0 * (k + 1.0).powi(2) * s[1] + (k + 2.0).powi(2) * s[2]) / 2.0
}

/// Counts `g(1..=n)`, from the closed form for plain paths and from the
/// generating tree otherwise.
pub fn interval_counts(f: &PathFamily, n: usize) -> Result<Vec<BigUint>, SeriesError> {
    if f.kind() == FamilyKind::Plain {
        gf_counts(n)
    } else {
        Ok(gt_counts(f, n))
    }
}

/// Fits `mu` and `alpha` against exact counts up to `n_max` (at least 8).
pub fn empirical_growth(f: &PathFamily, n_max: usize) -> Result<GrowthFit, SeriesError> {
    assert!(n_max >= 8, "need a few terms to extrapolate");
    let gs = interval_counts(f, n_max)?;
    let ln_g: Vec<f64> = gs.iter().map(ln_big).collect();
    // ln_g[i] = ln g(i+1)
    let ratio = |n: usize| (ln_g[n] - ln_g[n - 1]).exp();
    let k = n_max - 3;
    let mu_hat = richardson2(k as f64, [ratio(k), ratio(k + 1), ratio(k + 2)]);

    let mu = asymptotics(f).mu;
    let l = |n: usize| ln_g[n - 1] - n as f64 * mu.ln();
    let slope = |n: usize| (l(n + 1) - l(n)) / ((n as f64 + 1.0).ln() - (n as f64).ln());
    let alpha_hat = richardson2(k as f64, [slope(k), slope(k + 1), slope(k + 2)]);
    let kappa_hat = (l(n_max) - alpha_hat * (n_max as f64).ln()).exp();
    Ok(GrowthFit { n_max, mu_hat, alpha_hat, kappa_hat })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn plain_constants() {
        let a = asymptotics(&PathFamily::plain());
        let s5 = 5f64.sqrt();
        assert!(rel(a.mu, (11.0 + 5.0 * s5) / 2.0) < 1e-14);
        assert!(rel(a.alpha, -3.5) < 1e-14);
        assert!((a.c - (1.0 - s5) / 4.0).abs() < 1e-15);
        let b = asymptotics(&PathFamily::mirrored(1));
        assert!(rel(a.mu, b.mu) < 1e-14 && rel(a.alpha, b.alpha) < 1e-14);
        let m2 = asymptotics(&PathFamily::mdyck(2));
        assert!(rel(m2.mu, 17.0 + 12.0 * 2f64.sqrt()) < 1e-14);
    }

    #[test]
    fn critical_point_by_finite_differences() {
        for f in [PathFamily::plain(), PathFamily::mdyck(2), PathFamily::mdyck(3), PathFamily::mirrored(2), PathFamily::mirrored(3)] {
            let a = asymptotics(&f);
            let s = |x: f64, y: f64| step_gf(&f, x, y);
            let (x, y) = (a.x0, a.y0);
            assert!(rel(s(x, y), a.mu) < 1e-12, "{f}");
            let h = 1e-5;
            let sx = (s(x + h, y) - s(x - h, y)) / (2.0 * h);
            let sy = (s(x, y + h) - s(x, y - h)) / (2.0 * h);
            assert!(sx.abs() < 1e-6 * a.mu && sy.abs() < 1e-6 * a.mu, "{f}: {sx} {sy}");
            let h = 1e-4;
            let sxx = (s(x + h, y) - 2.0 * s(x, y) + s(x - h, y)) / (h * h);
            let syy = (s(x, y + h) - 2.0 * s(x, y) + s(x, y - h)) / (h * h);
            let sxy = (s(x + h, y + h) - s(x + h, y - h) - s(x - h, y + h) + s(x - h, y - h)) / (4.0 * h * h);
            let c = sxy / (sxx * syy).sqrt();
            assert!((c - a.c).abs() < 1e-5, "{f}: {c} vs {}", a.c);
            assert!(a.mu > 1.0 && a.alpha < -1.0 && -1.0 < a.c && a.c < 0.0);
        }
    }

    #[test]
    fn single_precision() {
        let a: Asymptotics<f32> = asymptotics_in(&PathFamily::plain());
        assert!((a.alpha + 3.5).abs() < 1e-5);
    }

    #[test]
    fn plain_growth_fit() {
        let fit = empirical_growth(&PathFamily::plain(), 40).unwrap();
        let a = asymptotics(&PathFamily::plain());
        assert!(rel(fit.mu_hat, a.mu) < 0.02, "{fit:?}");
        assert!((fit.alpha_hat - a.alpha).abs() < 0.3, "{fit:?}");
        assert!(fit.kappa_hat > 0.0);
    }

    #[test]
    fn log_of_big_integers() {
        let v = BigUint::from(10u32).pow(80);
        assert!((ln_big(&v) - 80.0 * 10f64.ln()).abs() < 1e-10);
        assert_eq!(ln_big(&BigUint::from(1u32)), 0.0);
    }
}
