//! The full invariant suite, as a list of independent pure checks.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{
    gt_count, gt_counts, interval_to_walk, quadrant_count, walk_to_interval, weighted_quadrant_count, WalkSpec,
};
use crate::involution::verify_involution;
use crate::paths::PathFamily;
use crate::poset::{enumerate_intervals_with_limit, join, meet, minimal_elements, FamilyPoset, Interval};
use crate::series::asym::{asymptotics, empirical_growth};
use crate::series::closed::{closed_form_g_1y, closed_form_g_x1, closed_form_gp_x1};
use crate::series::feq::{at_one, functional_equation_expand};
use crate::series::gf::{gf_counts, recurrence_check};
use crate::series::param::parametrization_checks;
use crate::series::residuals::{catalytic_residuals, q11_cubic, q11_series};
use crate::series::{MPoly, PolySeries};
use crate::sylvester::{interval_to_sylvester, parking_class_reps, phi, psi, avoids_patterns, in_wn};

/// Guard for brute-force enumeration inside the suite.
const LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn brute_count(f: &PathFamily, n: usize) -> Result<BigUint, String> {
    Ok(BigUint::from(enumerate_intervals_with_limit(f, n, LIMIT).map_err(err)?.len()))
}

pub fn check_known_counts() -> Outcome {
    let cases: [(PathFamily, &[u64]); 3] = [
        (PathFamily::plain(), &[1, 3, 13, 69]),
        (PathFamily::mdyck(2), &[1, 6, 62]),
        (PathFamily::mirrored(2), &[1, 5, 40]),
    ];
    for (f, want) in cases {
        for (k, &w) in want.iter().enumerate() {
            let n = k + 1;
            let got = brute_count(&f, n)?;
            ensure(got == big(w), || format!("{f} n={n}: {got} != {w}"))?;
        }
    }
    Ok("1 3 13 69 | 1 6 62 | 1 5 40".into())
}

/// Brute force, generating tree, walks, functional equation and weighted walks.
pub fn check_method_agreement(plain_max: usize, m2_max: usize) -> Outcome {
    let cases = [
        (PathFamily::plain(), plain_max),
        (PathFamily::mdyck(2), m2_max),
        (PathFamily::mirrored(2), m2_max),
    ];
    let mut compared = 0;
    for (f, nmax) in cases {
        let feq = at_one(&functional_equation_expand(&f, nmax).map_err(err)?);
        let spec = WalkSpec::for_family(&f);
        for (n, fe) in feq.iter().enumerate().skip(1) {
            let brute = brute_count(&f, n)?;
            let mut others = vec![
                ("gtree", gt_count(&f, n).map_err(err)?),
                ("walk", quadrant_count(&spec, n).get(0, 0)),
            ];
            ensure(fe.is_integer(), || format!("{f} n={n}: non-integer series coefficient"))?;
            others.push(("series", fe.to_integer().to_biguint().ok_or("negative coefficient")?));
            if f.is_mirrored() || f.m() == 1 {
                others.push(("weighted", weighted_quadrant_count(f.m(), n).map_err(err)?));
            }
            for (name, v) in others {
                ensure(v == brute, || format!("{f} n={n}: {name} gives {v}, brute force {brute}"))?;
            }
            compared += 1;
        }
    }
    Ok(format!("{compared} sizes agree"))
}

pub fn check_closed_form_counts(n: usize) -> Outcome {
    let g = gf_counts(n).map_err(err)?;
    let gt = gt_counts(&PathFamily::plain(), n);
    ensure(g == gt, || "closed form and generating tree differ".into())?;
    ensure(recurrence_check(&g), || "recurrence fails".into())?;
    Ok(format!("n <= {n}, g({n}) = {}", g[n - 1]))
}

/// Refined counts by brute force: `x^a y^b` with `(a, b)` the final descents,
/// or the first ascent and `r` when `first_ascent` is set.
fn brute_refined(n: usize, first_ascent: bool) -> Result<MPoly<BigRational, 2>, String> {
    let ivs = enumerate_intervals_with_limit(&PathFamily::plain(), n, LIMIT).map_err(err)?;
    let one = BigRational::from_integer(1.into());
    Ok(MPoly::from_terms(ivs.iter().map(|iv: &Interval| {
        let s = iv.stats();
        let e = if first_ascent {
            [s.first_ascent_bottom as u32, s.r as u32]
        } else {
            [s.final_descent_bottom as u32, s.final_descent_top as u32]
        };
        (e, one.clone())
    })))
}

pub fn check_refined_closed_forms(nmax: usize) -> Outcome {
    let one = BigRational::from_integer(1.into());
    let gp = closed_form_gp_x1(nmax).map_err(err)?;
    let gx = closed_form_g_x1(nmax).map_err(err)?;
    let gy = closed_form_g_1y(nmax).map_err(err)?;
    let coeff = |s: &PolySeries<BigRational>, n: usize| s.coeff(n);
    for n in 1..=nmax {
        let fd = brute_refined(n, false)?;
        let fa = brute_refined(n, true)?;
        ensure(coeff(&gx, n) == fd.subst(1, &one), || format!("G(x,1) at n={n}"))?;
        ensure(coeff(&gy, n) == fd.subst(0, &one), || format!("G(1,y) at n={n}"))?;
        ensure(coeff(&gp, n) == fa.subst(1, &one), || format!("G'(x,1) at n={n}"))?;
        // G'(x,1) = G'(1,x)
        let swapped = fa.subst(0, &one).map_monomials(|[_, j]| [j, 0]);
        ensure(coeff(&gp, n) == swapped, || format!("G'(x,1) != G'(1,x) at n={n}"))?;
    }
    Ok(format!("n <= {nmax}"))
}

pub fn check_residuals(order: usize, cubic_order: usize) -> Outcome {
    let r = catalytic_residuals(order).map_err(err)?;
    ensure(r.all(), || format!("{r:?}"))?;
    let cubic = q11_cubic(&q11_series(cubic_order).map_err(err)?);
    ensure(cubic.is_zero(), || format!("cubic residual nonzero mod t^{}", cubic_order + 1))?;
    Ok(format!("Pol2 mod t^{}, cubic mod t^{}, two exact identities", order + 1, cubic_order + 1))
}

fn all_words(len: usize, alphabet: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn check_bijections(word_n: usize, word_len: usize, interval_n: usize, walk_n: usize) -> Outcome {
    let mut words = 0usize;
    for n in 1..=word_n {
        for len in 1..=word_len {
            for w in all_words(len, n as u32) {
                if !in_wn(&w, n) {
                    continue;
                }
                let (u, v) = phi(&w, n).map_err(err)?;
                let back = psi(&u, &v, n).map_err(err)?;
                ensure(phi(&back, n).map_err(err)? == (u, v), || format!("phi(psi(phi(w))) for {w:?}"))?;
                if avoids_patterns(&w) {
                    ensure(back == w, || format!("psi(phi(w)) != w for {w:?}"))?;
                }
                words += 1;
            }
        }
    }
    for n in 1..=interval_n {
        let f = PathFamily::plain();
        let ivs = enumerate_intervals_with_limit(&f, n, LIMIT).map_err(err)?;
        let image: HashSet<_> = ivs.iter().map(|iv| interval_to_sylvester(iv, &f)).collect::<Result<_, _>>().map_err(err)?;
        ensure(image.len() == ivs.len(), || format!("interval words not injective at n={n}"))?;
    }
    let f = PathFamily::mirrored(2);
    for n in 1..=3 {
        let ivs = enumerate_intervals_with_limit(&f, n, LIMIT).map_err(err)?;
        let image: HashSet<_> = ivs.iter().map(|iv| interval_to_sylvester(iv, &f)).collect::<Result<_, _>>().map_err(err)?;
        let reps: HashSet<_> = parking_class_reps(2, n).into_iter().collect();
        ensure(image == reps && image.len() == ivs.len(), || format!("parking classes differ at n={n}"))?;
    }
    let f = PathFamily::plain();
    for n in 1..=walk_n {
        for iv in enumerate_intervals_with_limit(&f, n, LIMIT).map_err(err)? {
            let w = interval_to_walk(&iv, &f).map_err(err)?;
            ensure(walk_to_interval(&w, &f).map_err(err)? == iv, || format!("walk round trip fails for {iv:?}"))?;
        }
    }
    Ok(format!("{words} words; intervals n <= {interval_n}; 40 parking classes; walks n <= {walk_n}"))
}

fn lattice_agrees(f: &PathFamily, n: usize) -> Result<(), String> {
    let poset = FamilyPoset::new(f, n, LIMIT).map_err(err)?;
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            let (p, q) = (&poset.nodes[i], &poset.nodes[j]);
            let lub = poset.least_upper_bound(i, j).map(|k| poset.nodes[k].clone());
            let glb = poset.greatest_lower_bound(i, j).map(|k| poset.nodes[k].clone());
            ensure(lub == join(p, q, f).ok(), || format!("{f}: join of {p} and {q}"))?;
            ensure(glb == meet(p, q, f).ok(), || format!("{f}: meet of {p} and {q}"))?;
        }
    }
    Ok(())
}

pub fn check_lattice() -> Outcome {
    lattice_agrees(&PathFamily::plain(), 4)?;
    lattice_agrees(&PathFamily::mdyck(2), 3)?;
    let f = PathFamily::mirrored(2);
    let minimal = minimal_elements(&f, 3).map_err(err)?;
    ensure(minimal.len() == 5, || format!("{} minimal elements", minimal.len()))?;
    let poset = FamilyPoset::new(&f, 3, LIMIT).map_err(err)?;
    let mut missing_glb = 0;
    for i in 0..poset.len() {
        for j in 0..poset.len() {
            let lub = poset.least_upper_bound(i, j);
            ensure(lub.is_some(), || "a pair without least upper bound".into())?;
            let (p, q) = (&poset.nodes[i], &poset.nodes[j]);
            ensure(lub.map(|k| poset.nodes[k].clone()) == join(p, q, &f).ok(), || format!("join of {p} and {q}"))?;
            if poset.greatest_lower_bound(i, j).is_none() {
                missing_glb += 1;
            }
        }
    }
    ensure(missing_glb > 0, || "every pair has a greatest lower bound".into())?;
    Ok(format!("D'(2,3): 5 minimal elements, {missing_glb} ordered pairs without meet"))
}

pub fn check_involution(nmax: usize) -> Outcome {
    let mut total = 0;
    for n in 1..=nmax {
        let r = verify_involution(n, LIMIT).map_err(err)?;
        ensure(r.ok(), || format!("{r:?}"))?;
        total += r.intervals;
    }
    Ok(format!("{total} intervals, n <= {nmax}"))
}

pub fn check_asymptotics(plain_n: usize, m2_n: usize) -> Outcome {
    let a = asymptotics(&PathFamily::plain());
    let mu = (11.0 + 5.0 * 5f64.sqrt()) / 2.0;
    let rel = |x: f64, y: f64| ((x - y) / y).abs();
    ensure(rel(a.mu, mu) < 1e-12, || format!("mu = {}", a.mu))?;
    ensure(rel(a.alpha, -3.5) < 1e-12, || format!("alpha = {}", a.alpha))?;
    let fit = empirical_growth(&PathFamily::plain(), plain_n).map_err(err)?;
    ensure(rel(fit.mu_hat, mu) < 0.02, || format!("plain mu_hat = {}", fit.mu_hat))?;
    ensure((fit.alpha_hat + 3.5).abs() < 0.3, || format!("plain alpha_hat = {}", fit.alpha_hat))?;
    ensure(fit.kappa_hat > 0.0, || "kappa_hat not positive".into())?;
    for f in [PathFamily::mdyck(2), PathFamily::mirrored(2)] {
        let g = empirical_growth(&f, m2_n).map_err(err)?;
        let mu = asymptotics(&f).mu;
        ensure(rel(g.mu_hat, mu) < 0.05, || format!("{f}: mu_hat = {} vs {mu}", g.mu_hat))?;
    }
    Ok(format!("mu_hat = {:.6}, alpha_hat = {:.4}", fit.mu_hat, fit.alpha_hat))
}

pub fn check_parametrizations(order: usize) -> Outcome {
    let c = parametrization_checks(order).map_err(err)?;
    ensure(c.gp_x1 && c.g_1y && c.g_x1_minus_p, || format!("{c:?}"))?;
    Ok(if c.g_x1_plus_p {
        format!("all agree mod t^{}", order + 1)
    } else {
        format!("agree mod t^{}; G(x,1) needs -P", order + 1)
    })
}

type Check = (&'static str, Box<dyn Fn() -> Outcome + Send + Sync>);

fn checks(fast: bool) -> Vec<Check> {
    let pick = |full: usize, quick: usize| if fast { quick } else { full };
    let (plain, m2) = (pick(7, 5), pick(5, 4));
    let counts = pick(60, 12);
    let refined = pick(6, 4);
    let (res, cubic) = (pick(20, 12), pick(30, 12));
    let (wn, wl, ivn, walkn) = (4, pick(8, 6), pick(6, 4), pick(6, 4));
    let inv = pick(7, 5);
    let (gp, gm) = (pick(60, 30), pick(40, 20));
    let par = pick(14, 8);
    vec![
        ("known_counts", Box::new(check_known_counts)),
        ("method_agreement", Box::new(move || check_method_agreement(plain, m2))),
        ("closed_form_counts", Box::new(move || check_closed_form_counts(counts))),
        ("refined_closed_forms", Box::new(move || check_refined_closed_forms(refined))),
        ("catalytic_residuals", Box::new(move || check_residuals(res, cubic))),
        ("bijections", Box::new(move || check_bijections(wn, wl, ivn, walkn))),
        ("lattice", Box::new(check_lattice)),
        ("involution", Box::new(move || check_involution(inv))),
        ("asymptotics", Box::new(move || check_asymptotics(gp, gm))),
        ("parametrizations", Box::new(move || check_parametrizations(par))),
    ]
}

/// Names of the checks, in reporting order.
pub fn check_names() -> Vec<&'static str> {
    checks(true).into_iter().map(|(n, _)| n).collect()
}

/// Runs every check concurrently; results come back in a fixed order.
pub fn run_all(fast: bool) -> Vec<CheckResult> {
    checks(fast)
        .into_par_iter()
        .map(|(name, f)| match f() {
            Ok(detail) => CheckResult { name, passed: true, detail },
            Err(detail) => CheckResult { name, passed: false, detail },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suite_passes() {
        for r in run_all(true) {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn words_enumeration() {
        assert_eq!(all_words(3, 2).len(), 8);
        assert_eq!(all_words(0, 5), vec![Vec::<u32>::new()]);
    }
}
