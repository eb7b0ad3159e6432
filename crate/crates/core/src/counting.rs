//! Exact interval counts by generating trees and quadrant walks, and the
//! bijection between intervals and walks given by peak insertion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::paths::{in_family, DyckPath, PathError, PathFamily, Step};
use crate::poset::{Interval, PosetError};
use crate::series::MPoly;

/// Scalars that can hold a count. Only addition is needed by the DPs.
pub trait Count: Clone + Zero + for<'a> AddAssign<&'a Self> + Send + Sync {}

impl<T> Count for T where T: Clone + Zero + for<'a> AddAssign<&'a T> + Send + Sync {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("step {index} {step:?} is not allowed for {spec}")]
    IllegalStep { index: usize, step: (i64, i64), spec: WalkSpec },
    #[error("walk leaves the quadrant at step {0}")]
    LeavesQuadrant(usize),
    #[error("size must be at least 1")]
    EmptySize,
    #[error("{0} has no walk bijection")]
    Unsupported(WalkSpec),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Path(#[from] PathError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkKind {
    /// Steps `(m, 0)` and `(dx, dy)` with `dx < m`, `dx + dy <= m`.
    InfiniteS,
    /// Steps `(m, dy)` with `dy <= 0` and `(dx, dy)` with `dx < m`, `dy <= 1`.
    InfiniteSPrime,
    /// Finite multiset read off `(1+u)^m (1+v) (1+u+v) / (uv)`.
    WeightedFinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WalkSpec {
    pub kind: WalkKind,
    pub m: usize,
}

impl WalkSpec {
    pub fn new(kind: WalkKind, m: usize) -> Self {
        assert!(m >= 1, "m must be positive");
        WalkSpec { kind, m }
    }

    /// Walk model attached to a family by the peak-insertion bijection.
    pub fn for_family(f: &PathFamily) -> Self {
        let kind = if f.is_mirrored() { WalkKind::InfiniteSPrime } else { WalkKind::InfiniteS };
        WalkSpec::new(kind, f.m())
    }
}

impl fmt::Display for WalkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            WalkKind::InfiniteS => "S",
            WalkKind::InfiniteSPrime => "S'",
            WalkKind::WeightedFinite => "weighted",
        };
        write!(f, "{name}(m={})", self.m)
    }
}

pub fn is_legal_step(spec: &WalkSpec, step: (i64, i64)) -> bool {
    let m = spec.m as i64;
    let (dx, dy) = step;
    match spec.kind {
        WalkKind::InfiniteS => (dx, dy) == (m, 0) || (dx < m && dx + dy <= m),
        WalkKind::InfiniteSPrime => (dx == m && dy <= 0) || (dx < m && dy <= 1),
        WalkKind::WeightedFinite => weighted_steps(spec.m).contains_key(&step),
    }
}

/// Endpoint counts of confined walks with a fixed number of steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTable<C> {
    pub steps: usize,
    pub counts: BTreeMap<(usize, usize), C>,
}

impl<C: Count> CountTable<C> {
    fn from_grid(steps: usize, grid: &[Vec<C>]) -> Self {
        let mut counts = BTreeMap::new();
        for (i, row) in grid.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    counts.insert((i, j), c.clone());
                }
            }
        }
        CountTable { steps, counts }
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        self.counts.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn total(&self) -> C {
        let mut t = C::zero();
        for c in self.counts.values() {
            t += c;
        }
        t
    }
}

impl<C: fmt::Display> CountTable<C> {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,count\n");
        for ((i, j), c) in &self.counts {
            out.push_str(&format!("{i},{j},{c}\n"));
        }
        out
    }
}

/// Sum over the rectangle `[i0, ..) x [j0, ..)` for every corner, built with
/// additions only.
fn suffix_sums<C: Count>(grid: &[Vec<C>]) -> Vec<Vec<C>> {
    let rows = grid.len();
    let cols = grid.first().map_or(0, Vec::len);
    let mut out = vec![vec![C::zero(); cols + 1]; rows + 1];
    for i in (0..rows).rev() {
        let mut row_acc = C::zero();
        for j in (0..cols).rev() {
            row_acc += &grid[i][j];
            let mut v = row_acc.clone();
            v += &out[i + 1][j];
            out[i][j] = v;
        }
    }
    out
}

fn corner<C: Count>(sums: &[Vec<C>], i: usize, j: usize) -> C {
    sums.get(i).and_then(|r| r.get(j)).cloned().unwrap_or_else(C::zero)
}

/// One step of the walk DP for the infinite step sets, in endpoint
/// coordinates `(i, j)`.
fn walk_step<C: Count>(spec: &WalkSpec, grid: &[Vec<C>]) -> Vec<Vec<C>> {
    let m = spec.m;
    let rows = grid.len();
    let cols = grid[0].len();
    match spec.kind {
        WalkKind::InfiniteS => {
            // reindex by s = i + j so that the target condition is a corner
            let smax = rows + cols;
            let mut by_sum = vec![vec![C::zero(); smax]; rows];
            for (i, row) in grid.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    by_sum[i][i + j] = c.clone();
                }
            }
            let sums = suffix_sums(&by_sum);
            let (nrows, ncols) = (rows + m, cols + m);
            let mut next = vec![vec![C::zero(); ncols]; nrows];
            for (k, row) in next.iter_mut().enumerate() {
                for (l, cell) in row.iter_mut().enumerate() {
                    let i0 = (k + 1).saturating_sub(m);
                    let s0 = (k + l).saturating_sub(m);
                    let mut v = corner(&sums, i0, s0);
                    if k >= m && k - m < rows && l < cols {
                        v += &grid[k - m][l];
                    }
                    *cell = v;
                }
            }
            next
        }
        WalkKind::InfiniteSPrime => {
            let sums = suffix_sums(grid);
            let row_suffix: Vec<Vec<C>> = grid
                .iter()
                .map(|row| {
                    let mut acc = C::zero();
                    let mut out: Vec<C> = row
                        .iter()
                        .rev()
                        .map(|c| {
                            acc += c;
                            acc.clone()
                        })
                        .collect();
                    out.reverse();
                    out
                })
                .collect();
            let (nrows, ncols) = (rows + m, cols + 1);
            let mut next = vec![vec![C::zero(); ncols]; nrows];
            for (k, row) in next.iter_mut().enumerate() {
                for (l, cell) in row.iter_mut().enumerate() {
                    let mut v = corner(&sums, (k + 1).saturating_sub(m), l.saturating_sub(1));
                    if k >= m {
                        v += &corner(&row_suffix, k - m, l);
                    }
                    *cell = v;
                }
            }
            next
        }
        WalkKind::WeightedFinite => unreachable!("weighted walks use their own DP"),
    }
}

/// Endpoint counts of confined walks of `steps` steps from the origin.
pub fn quadrant_table<C: Count + One>(spec: &WalkSpec, steps: usize) -> CountTable<C> {
    if spec.kind == WalkKind::WeightedFinite {
        panic!("use weighted_quadrant_table for the weighted model");
    }
    let mut grid = vec![vec![C::one()]];
    for _ in 0..steps {
        grid = walk_step(spec, &grid);
    }
    CountTable::from_grid(steps, &grid)
}

pub fn quadrant_count(spec: &WalkSpec, steps: usize) -> CountTable<BigUint> {
    quadrant_table(spec, steps)
}

/// Reference DP: enumerates every legal step explicitly.
pub fn quadrant_count_naive(spec: &WalkSpec, steps: usize) -> CountTable<BigUint> {
    let m = spec.m;
    let mut current: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    current.insert((0, 0), BigUint::one());
    for _ in 0..steps {
        let mut next: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        for (&(i, j), c) in &current {
            // a legal step raises x by at most m, and y by at most m + i
            // (S) or 1 (S'), so this box contains every reachable target
            let ymax = match spec.kind {
                WalkKind::InfiniteS => j + m + i,
                _ => j + 1,
            };
            for k in 0..=i + m {
                for l in 0..=ymax {
                    let step = (k as i64 - i as i64, l as i64 - j as i64);
                    if is_legal_step(spec, step) {
                        *next.entry((k, l)).or_default() += c;
                    }
                }
            }
        }
        current = next;
    }
    CountTable { steps, counts: current }
}

/// Steps of the weighted model with their multiplicities.
pub fn weighted_steps(m: usize) -> BTreeMap<(i64, i64), BigUint> {
    let one = MPoly::<BigUint, 2>::one();
    let u = MPoly::<BigUint, 2>::var(0);
    let v = MPoly::<BigUint, 2>::var(1);
    let numerator = &(&(&one + &u).pow(m as u32) * &(&one + &v)) * &(&(&one + &u) + &v);
    numerator
        .terms()
        .map(|(e, c)| ((e[0] as i64 - 1, e[1] as i64 - 1), c.clone()))
        .collect()
}

pub fn weighted_quadrant_table(m: usize, steps: usize) -> CountTable<BigUint> {
    let step_set = weighted_steps(m);
    let mut current: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    current.insert((0, 0), BigUint::one());
    for _ in 0..steps {
        let mut next: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
        for (&(i, j), c) in &current {
            for (&(dx, dy), w) in &step_set {
                let (k, l) = (i as i64 + dx, j as i64 + dy);
                if k >= 0 && l >= 0 {
                    *next.entry((k as usize, l as usize)).or_default() += c * w;
                }
            }
        }
        current = next;
    }
    CountTable { steps, counts: current }
}

/// Weighted walks of `n - 1` steps from the origin back to the origin.
pub fn weighted_quadrant_count(m: usize, n: usize) -> Result<BigUint, CountingError> {
    if n == 0 {
        return Err(CountingError::EmptySize);
    }
    Ok(weighted_quadrant_table(m, n - 1).get(0, 0))
}

/// Runs the generating tree up to size `n`, handing the dense label table
/// at each size `1..=n` to `visit`.
fn gt_run<C: Count + One>(f: &PathFamily, n: usize, mut visit: impl FnMut(usize, &[Vec<C>])) {
    let m = f.m();
    // labels are bounded by m*n in both coordinates
    let dim = m * n + 1;
    let mut cnt = vec![vec![C::zero(); dim]; dim];
    if f.is_mirrored() {
        cnt[m][1] = C::one();
    } else {
        cnt[m][m] = C::one();
    }
    visit(1, &cnt);
    for size in 2..=n {
        let sums = suffix_sums(&cnt);
        let mut next = vec![vec![C::zero(); dim]; dim];
        for a in m..dim {
            // (a - m, r) -> (a, s) for 1 <= s <= r, summed from the top down
            let mut tail = C::zero();
            for b in (0..dim).rev() {
                let mut v = C::zero();
                if f.is_mirrored() {
                    if b == 0 {
                        continue;
                    }
                    tail += &cnt[a - m][b];
                    v += &tail;
                    // (a0, r) -> (a, s + 1) for a - m < a0, 0 <= s <= r
                    v += &corner(&sums, a - m + 1, b - 1);
                } else {
                    if b < a {
                        continue;
                    }
                    v += &corner(&sums, a - m + 1, b - m);
                    v += &cnt[a - m][b - m];
                }
                next[a][b] = v;
            }
        }
        cnt = next;
        visit(size, &cnt);
    }
}

/// Populations of generating-tree labels at size `n`.
///
/// For m-Dyck families labels are the final descent lengths `(a, b)` of the
/// bottom and top paths; for mirrored families they are the first ascent of
/// the bottom path and the statistic `r`.
pub fn gt_labels<C: Count + One>(f: &PathFamily, n: usize) -> Result<BTreeMap<(usize, usize), C>, CountingError> {
    if n == 0 {
        return Err(CountingError::EmptySize);
    }
    let mut out = BTreeMap::new();
    gt_run::<C>(f, n, |size, cnt| {
        if size == n {
            for (a, row) in cnt.iter().enumerate() {
                for (b, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        out.insert((a, b), c.clone());
                    }
                }
            }
        }
    });
    Ok(out)
}

/// Number of intervals of `f` at size `n`.
pub fn gt_count(f: &PathFamily, n: usize) -> Result<BigUint, CountingError> {
    Ok(gt_labels::<BigUint>(f, n)?.values().sum())
}

/// Interval counts for sizes `1..=n`, sharing one DP run.
pub fn gt_counts(f: &PathFamily, n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n);
    gt_run::<BigUint>(f, n, |_, cnt| {
        let mut total = BigUint::zero();
        for row in cnt {
            for c in row {
                total += c;
            }
        }
        out.push(total);
    });
    out
}

/// Coefficient of `t^n` of the bivariate generating function: `x^a y^b`
/// per interval with label `(a, b)`.
pub fn gt_count_refined(f: &PathFamily, n: usize) -> Result<MPoly<BigUint, 2>, CountingError> {
    Ok(MPoly::from_terms(
        gt_labels::<BigUint>(f, n)?.into_iter().map(|((a, b), c)| ([a as u32, b as u32], c)),
    ))
}

/// A walk in the plane from the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Walk {
    pub steps: Vec<(i64, i64)>,
}

impl Walk {
    pub fn new(steps: Vec<(i64, i64)>) -> Self {
        Walk { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Positions visited, starting with the origin.
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut out = vec![(0, 0)];
        for (dx, dy) in &self.steps {
            let (x, y) = *out.last().unwrap();
            out.push((x + dx, y + dy));
        }
        out
    }

    pub fn endpoint(&self) -> (i64, i64) {
        *self.vertices().last().unwrap()
    }

    pub fn is_confined(&self) -> bool {
        self.vertices().iter().all(|&(x, y)| x >= 0 && y >= 0)
    }

    pub fn is_excursion(&self) -> bool {
        self.is_confined() && self.endpoint() == (0, 0)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|(x, y)| format!("({x},{y})")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn repeat(step: Step, k: usize) -> impl Iterator<Item = Step> {
    std::iter::repeat_n(step, k)
}

/// Inserts a peak `U^m D^m` into the final descent, starting at height `h`.
pub fn insert_final_peak(p: &DyckPath, m: usize, h: usize) -> DyckPath {
    assert!(h <= p.final_descent(), "height {h} exceeds the final descent of {p}");
    let steps = p.steps();
    let cut = steps.len() - h;
    let out = steps[..cut]
        .iter()
        .copied()
        .chain(repeat(Step::U, m))
        .chain(repeat(Step::D, m))
        .chain(steps[cut..].iter().copied())
        .collect();
    DyckPath::from_steps_unchecked(out)
}

/// Removes the last `m` up steps together with the `m` down steps following them.
pub fn delete_final_peak(p: &DyckPath, m: usize) -> DyckPath {
    let steps = p.steps();
    let last_up = steps.iter().rposition(|s| *s == Step::U).expect("nonempty path");
    let start = last_up + 1 - m;
    let mut out = steps[..start].to_vec();
    out.extend_from_slice(&steps[last_up + 1 + m..]);
    DyckPath::from_steps_unchecked(out)
}

/// Inserts a peak `U^m D^m` into the first ascent, starting at height `h`.
pub fn insert_first_peak(p: &DyckPath, m: usize, h: usize) -> DyckPath {
    assert!(h <= p.first_ascent(), "height {h} exceeds the first ascent of {p}");
    let steps = p.steps();
    let out = steps[..h]
        .iter()
        .copied()
        .chain(repeat(Step::U, m))
        .chain(repeat(Step::D, m))
        .chain(steps[h..].iter().copied())
        .collect();
    DyckPath::from_steps_unchecked(out)
}

/// Removes the peak `U^m D^m` at the top of the first ascent.
pub fn delete_first_peak(p: &DyckPath, m: usize) -> DyckPath {
    let c1 = p.first_ascent();
    let steps = p.steps();
    let mut out = steps[..c1 - m].to_vec();
    out.extend_from_slice(&steps[c1 + m..]);
    DyckPath::from_steps_unchecked(out)
}

/// The `r` with `c_1 + ... + c_r = d_1`, for `c` and `d` the ascent
/// compositions of `p` and `q`.
pub fn r_statistic(p: &DyckPath, q: &DyckPath) -> usize {
    let d1 = q.first_ascent();
    let mut acc = 0;
    for (r, c) in p.ascent_lengths().into_iter().enumerate() {
        acc += c;
        if acc >= d1 {
            return r + 1;
        }
    }
    unreachable!("first ascent of the top exceeds the size")
}

fn walk_label(p: &DyckPath, q: &DyckPath, f: &PathFamily) -> (i64, i64) {
    let m = f.m() as i64;
    if f.is_mirrored() {
        (p.first_ascent() as i64 - m, r_statistic(p, q) as i64 - 1)
    } else {
        let (a, b) = (p.final_descent() as i64, q.final_descent() as i64);
        (a - m, b - a)
    }
}

fn check_interval(iv: &Interval, f: &PathFamily) -> Result<(), CountingError> {
    for p in [iv.bottom(), iv.top()] {
        if !in_family(p, f) || p.size() % f.m() != 0 {
            return Err(PathError::NotInFamily { path: p.to_string(), family: *f }.into());
        }
    }
    Ok(())
}

/// The walk tracing the labels of the peak-deletion chain from size 1 up to `iv`.
pub fn interval_to_walk(iv: &Interval, f: &PathFamily) -> Result<Walk, CountingError> {
    check_interval(iv, f)?;
    let m = f.m();
    let (mut p, mut q) = (iv.bottom().clone(), iv.top().clone());
    let mut labels = vec![walk_label(&p, &q, f)];
    while p.size() > m {
        if f.is_mirrored() {
            p = delete_first_peak(&p, m);
            q = delete_first_peak(&q, m);
        } else {
            p = delete_final_peak(&p, m);
            q = delete_final_peak(&q, m);
        }
        labels.push(walk_label(&p, &q, f));
    }
    labels.reverse();
    debug_assert_eq!(labels[0], (0, 0));
    Ok(Walk::new(labels.windows(2).map(|w| (w[1].0 - w[0].0, w[1].1 - w[0].1)).collect()))
}

/// Peak insertion heights in the bottom and top paths that move the label
/// of `[p, q]` from walk position `from` to `to`, for a legal step.
pub fn insertion_heights(p: &DyckPath, q: &DyckPath, f: &PathFamily, from: (i64, i64), to: (i64, i64)) -> (usize, usize) {
    let m = f.m() as i64;
    let ((i, j), (k, l)) = (from, to);
    if f.is_mirrored() {
        let c = p.ascent_lengths();
        let prefix = |s: usize| c[..s].iter().sum::<usize>();
        if k == m + i {
            (c[0], prefix(l as usize + 1))
        } else if l == 0 {
            (k as usize, k as usize)
        } else {
            (k as usize, prefix(l as usize))
        }
    } else if (k, l) == (m + i, j) {
        (p.final_descent(), q.final_descent())
    } else {
        (k as usize, (k + l) as usize)
    }
}

/// Rebuilds the interval whose walk is `w` by replaying peak insertions.
pub fn walk_to_interval(w: &Walk, f: &PathFamily) -> Result<Interval, CountingError> {
    let spec = WalkSpec::for_family(f);
    let m = f.m();
    let root = DyckPath::from_steps_unchecked(repeat(Step::U, m).chain(repeat(Step::D, m)).collect());
    let (mut p, mut q) = (root.clone(), root);
    let (mut i, mut j) = (0i64, 0i64);
    for (index, &step) in w.steps.iter().enumerate() {
        if !is_legal_step(&spec, step) {
            return Err(CountingError::IllegalStep { index, step, spec });
        }
        let (k, l) = (i + step.0, j + step.1);
        if k < 0 || l < 0 {
            return Err(CountingError::LeavesQuadrant(index));
        }
        let (hp, hq) = insertion_heights(&p, &q, f, (i, j), (k, l));
        if f.is_mirrored() {
            p = insert_first_peak(&p, m, hp);
            q = insert_first_peak(&q, m, hq);
        } else {
            p = insert_final_peak(&p, m, hp);
            q = insert_final_peak(&q, m, hq);
        }
        i = k;
        j = l;
    }
    let iv = Interval::new(p, q)?;
    debug_assert_eq!(walk_label(iv.bottom(), iv.top(), f), (i, j));
    Ok(iv)
}
