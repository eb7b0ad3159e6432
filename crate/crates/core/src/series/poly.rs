//! Sparse polynomials in a fixed number of variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::ring::Ring;
use super::SeriesError;

/// Exponent vector of a monomial.
pub type Monomial<const V: usize> = [u32; V];

/// Polynomial in `V` variables, stored as a map from exponent vectors to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<C, const V: usize> {
    terms: BTreeMap<Monomial<V>, C>,
}

const NAMES: [&str; 4] = ["x", "y", "t", "z"];

impl<C, const V: usize> MPoly<C, V>
where
    C: Clone + Zero + PartialEq,
{
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial([0; V], c)
    }

    pub fn monomial(exps: Monomial<V>, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial<V>, C)>>(terms: I) -> Self
    where
        C: AddAssign,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exps: Monomial<V>, c: C)
    where
        C: AddAssign,
    {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<V>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &Monomial<V>) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> C {
        self.coeff(&[0; V])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&d| d == 0))
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn map_coeffs<D, F>(&self, f: F) -> MPoly<D, V>
    where
        D: Clone + Zero + PartialEq + AddAssign,
        F: Fn(&C) -> D,
    {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Applies a map on exponent vectors, e.g. `x -> x*y` or dropping a variable.
    pub fn map_monomials<const W: usize, F>(&self, f: F) -> MPoly<C, W>
    where
        C: AddAssign,
        F: Fn(Monomial<V>) -> Monomial<W>,
    {
        MPoly::from_terms(self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }
}

impl<C, const V: usize> MPoly<C, V>
where
    C: Clone + Zero + One + PartialEq + AddAssign + Mul<Output = C>,
{
    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0; V];
        e[k] = 1;
        Self::monomial(e, C::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[C; V]) -> C {
        let mut total = C::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &d) in e.iter().enumerate() {
                for _ in 0..d {
                    term = term * point[v].clone();
                }
            }
            total += term;
        }
        total
    }

    /// Sets variable `var` to the constant `value`.
    pub fn subst(&self, var: usize, value: &C) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for _ in 0..e[var] {
                term = term * value.clone();
            }
            let mut f = *e;
            f[var] = 0;
            out.add_term(f, term);
        }
        out
    }

    /// Replaces variable `var` by the polynomial `q`.
    pub fn compose_var(&self, var: usize, q: &Self) -> Self {
        let deg = self.degree_in(var).unwrap_or(0);
        let mut powers = vec![Self::one()];
        for _ in 0..deg {
            let next = powers.last().unwrap() * q;
            powers.push(next);
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            f[var] = 0;
            out = out + &powers[e[var] as usize] * &Self::monomial(f, c.clone());
        }
        out
    }

    /// Exact division by `x_var^k`.
    pub fn div_var_power(&self, var: usize, k: u32) -> Result<Self, SeriesError> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[var] < k {
                return Err(SeriesError::DivisionFailure(format!(
                    "monomial {e:?} is not divisible by {}^{k}",
                    NAMES.get(var).unwrap_or(&"v")
                )));
            }
            let mut f = *e;
            f[var] -= k;
            out.add_term(f, c.clone());
        }
        Ok(out)
    }
}

impl<C: Ring + AddAssign, const V: usize> MPoly<C, V> {
    /// Exact division by `(x_var - a)`, by synthetic division on each slice
    /// with the other exponents fixed.
    pub fn div_linear(&self, var: usize, a: &C) -> Result<Self, SeriesError> {
        let mut slices: BTreeMap<Monomial<V>, BTreeMap<u32, C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[var] = 0;
            slices.entry(rest).or_default().insert(e[var], c.clone());
        }
        let mut out = Self::zero();
        for (rest, slice) in slices {
            let deg = *slice.keys().next_back().unwrap();
            let mut carry = C::zero();
            for d in (0..=deg).rev() {
                let c = slice.get(&d).cloned().unwrap_or_else(C::zero) + carry.clone();
                if d == 0 {
                    if !c.is_zero() {
                        return Err(SeriesError::DivisionFailure(format!(
                            "nonzero remainder {c:?} dividing by {} - {a:?}",
                            NAMES.get(var).unwrap_or(&"v")
                        )));
                    }
                } else {
                    let mut e = rest;
                    e[var] = d - 1;
                    out.add_term(e, c.clone());
                    carry = c * a.clone();
                }
            }
        }
        Ok(out)
    }

    /// Divided difference `(p - p|_{x_var = a}) / (x_var - a)`.
    pub fn divided_difference(&self, var: usize, a: &C) -> Self {
        (self - &self.subst(var, a))
            .div_linear(var, a)
            .expect("divided differences are exact")
    }
}

impl<C: Ring + AddAssign, const V: usize> Ring for MPoly<C, V> {
    fn unit_inverse(&self) -> Option<Self> {
        if self.is_constant() {
            self.constant_term().unit_inverse().map(Self::constant)
        } else {
            None
        }
    }
}

impl<C, const V: usize> Zero for MPoly<C, V>
where
    C: Clone + Zero + PartialEq + AddAssign,
{
    fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C, const V: usize> One for MPoly<C, V>
where
    C: Clone + Zero + One + PartialEq + AddAssign + Mul<Output = C>,
{
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<'a, C, const V: usize> Add<&'a MPoly<C, V>> for &'a MPoly<C, V>
where
    C: Clone + Zero + PartialEq + AddAssign,
{
    type Output = MPoly<C, V>;
    fn add(self, rhs: &MPoly<C, V>) -> MPoly<C, V> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, C, const V: usize> Sub<&'a MPoly<C, V>> for &'a MPoly<C, V>
where
    C: Clone + Zero + PartialEq + AddAssign + Neg<Output = C>,
{
    type Output = MPoly<C, V>;
    fn sub(self, rhs: &MPoly<C, V>) -> MPoly<C, V> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a, C, const V: usize> Mul<&'a MPoly<C, V>> for &'a MPoly<C, V>
where
    C: Clone + Zero + PartialEq + AddAssign + Mul<Output = C>,
{
    type Output = MPoly<C, V>;
    fn mul(self, rhs: &MPoly<C, V>) -> MPoly<C, V> {
        let mut out = MPoly::<C, V> { terms: BTreeMap::new() };
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                let mut g = *e;
                for i in 0..V {
                    g[i] += f[i];
                }
                out.add_term(g, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<C, const V: usize> Neg for MPoly<C, V>
where
    C: Clone + Zero + PartialEq + Neg<Output = C>,
{
    type Output = MPoly<C, V>;
    fn neg(self) -> MPoly<C, V> {
        MPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident, $($bound:tt)*) => {
        impl<C, const V: usize> $tr for MPoly<C, V>
        where
            C: Clone + Zero + PartialEq + AddAssign + $($bound)*,
        {
            type Output = MPoly<C, V>;
            fn $m(self, rhs: MPoly<C, V>) -> MPoly<C, V> {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add, Clone);
owned_ops!(Sub, sub, Neg<Output = C>);
owned_ops!(Mul, mul, Mul<Output = C>);

impl<C, const V: usize> fmt::Display for MPoly<C, V>
where
    C: Clone + Zero + One + PartialEq + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &d)| d > 0)
                .map(|(v, &d)| {
                    let name = NAMES.get(v).copied().unwrap_or("v");
                    if d == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{d}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{c}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C, const V: usize> fmt::Debug for MPoly<C, V>
where
    C: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
