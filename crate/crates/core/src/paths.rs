//! Dyck paths and the three families living inside them.
//!
//! Every path is stored as a word of unit steps. An m-Dyck path of size `n`
//! is a Dyck path of size `m*n` whose ascents all have length divisible by
//! `m`; a mirrored m-Dyck path is the same with descents. "Large" steps are
//! only ever a view on runs of `m` unit steps.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default bound on `n * m` for exhaustive enumeration.
pub const DEFAULT_SIZE_LIMIT: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("empty path")]
    EmptyInput,
    #[error("unexpected character {0:?} in path")]
    BadCharacter(char),
    #[error("path has {ups} up steps but {downs} down steps")]
    UnbalancedPath { ups: usize, downs: usize },
    #[error("prefix of length {0} goes below the axis")]
    NegativePrefix(usize),
    #[error("n*m = {requested} exceeds the enumeration limit {limit}")]
    SizeLimitExceeded { requested: usize, limit: usize },
    #[error("path {path} is not in family {family}")]
    NotInFamily { path: String, family: PathFamily },
    #[error("sequence violates the family bounds: {0}")]
    BoundsViolated(String),
    #[error("sequence must be positive and nonincreasing")]
    NonPositive,
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("cannot parse sequence {0:?}")]
    BadSequence(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

/// A Dyck path, stored as its unit-step word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    /// Builds a path from steps, checking balance and nonnegativity.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, PathError> {
        if steps.is_empty() {
            return Err(PathError::EmptyInput);
        }
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(PathError::NegativePrefix(i + 1));
            }
        }
        if height != 0 {
            let ups = steps.iter().filter(|s| **s == Step::U).count();
            return Err(PathError::UnbalancedPath {
                ups,
                downs: steps.len() - ups,
            });
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::from_steps(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// The single-peak path `U^k D^k`.
    pub fn pyramid(k: usize) -> Self {
        let mut steps = vec![Step::U; k];
        steps.extend(std::iter::repeat_n(Step::D, k));
        DyckPath::from_steps_unchecked(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of unit up steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Lengths of the maximal runs of U, left to right.
    pub fn ascent_lengths(&self) -> Vec<usize> {
        runs(&self.steps, Step::U)
    }

    /// Lengths of the maximal runs of D, left to right.
    pub fn descent_lengths(&self) -> Vec<usize> {
        runs(&self.steps, Step::D)
    }

    pub fn first_ascent(&self) -> usize {
        self.steps.iter().take_while(|s| **s == Step::U).count()
    }

    pub fn final_descent(&self) -> usize {
        self.steps.iter().rev().take_while(|s| **s == Step::D).count()
    }

    /// Number of U steps among the first `len` steps, for each `len` in `0..=2n`.
    pub fn up_prefix_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut c = 0;
        out.push(0);
        for s in &self.steps {
            if *s == Step::U {
                c += 1;
            }
            out.push(c);
        }
        out
    }
}

fn runs(steps: &[Step], which: Step) -> Vec<usize> {
    let mut out = Vec::new();
    let mut cur = 0;
    for s in steps {
        if *s == which {
            cur += 1;
        } else if cur > 0 {
            out.push(cur);
            cur = 0;
        }
    }
    if cur > 0 {
        out.push(cur);
    }
    out
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(if *s == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({self})")
    }
}

impl FromStr for DyckPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_path(&s).map_err(serde::de::Error::custom)
    }
}

/// Parses a word over `{U, D}`. Case-insensitive; whitespace is skipped.
pub fn parse_path(text: &str) -> Result<DyckPath, PathError> {
    let mut steps = Vec::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            'U' | 'u' => steps.push(Step::U),
            'D' | 'd' => steps.push(Step::D),
            c if c.is_whitespace() => {}
            c => return Err(PathError::BadCharacter(c)),
        }
    }
    DyckPath::from_steps(steps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Plain,
    MDyck,
    Mirrored,
}

/// Which subset of Dyck paths of size `m*n` we are looking at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathFamily {
    kind: FamilyKind,
    m: usize,
}

impl PathFamily {
    pub fn new(kind: FamilyKind, m: usize) -> Result<Self, PathError> {
        if m == 0 {
            return Err(PathError::InvalidFamily("m must be at least 1".into()));
        }
        if kind == FamilyKind::Plain && m != 1 {
            return Err(PathError::InvalidFamily("plain family requires m = 1".into()));
        }
        Ok(PathFamily { kind, m })
    }

    pub fn plain() -> Self {
        PathFamily { kind: FamilyKind::Plain, m: 1 }
    }

    pub fn mdyck(m: usize) -> Self {
        PathFamily::new(FamilyKind::MDyck, m).expect("m >= 1")
    }

    pub fn mirrored(m: usize) -> Self {
        PathFamily::new(FamilyKind::Mirrored, m).expect("m >= 1")
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_mirrored(&self) -> bool {
        self.kind == FamilyKind::Mirrored
    }

    /// Whether the induced poset is a lattice (meets exist).
    pub fn is_lattice(&self) -> bool {
        !self.is_mirrored() || self.m == 1
    }

    /// Family size of a path, i.e. its unit size divided by `m`.
    pub fn size_of(&self, p: &DyckPath) -> usize {
        p.size() / self.m
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Plain => write!(f, "plain"),
            FamilyKind::MDyck => write!(f, "mdyck(m={})", self.m),
            FamilyKind::Mirrored => write!(f, "mirrored(m={})", self.m),
        }
    }
}

/// A composition of an integer, i.e. a sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        Some(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

pub fn ascent_composition(p: &DyckPath) -> Composition {
    Composition { parts: p.ascent_lengths() }
}

pub fn in_family(p: &DyckPath, f: &PathFamily) -> bool {
    let m = f.m;
    match f.kind {
        FamilyKind::Plain => true,
        FamilyKind::MDyck => p.ascent_lengths().iter().all(|a| a % m == 0),
        FamilyKind::Mirrored => p.descent_lengths().iter().all(|d| d % m == 0),
    }
}

pub fn fuss_catalan(m: usize, n: usize) -> BigUint {
    // binom((m+1)n, n) / (mn + 1)
    let top = (m + 1) * n;
    let mut binom = BigUint::one();
    for i in 0..n {
        binom *= BigUint::from(top - i);
        binom /= BigUint::from(i + 1);
    }
    binom / BigUint::from(m * n + 1)
}

/// All paths of `f` with family size `n`, in lexicographic order (U < D).
pub fn enumerate_paths(f: &PathFamily, n: usize) -> Result<Vec<DyckPath>, PathError> {
    enumerate_paths_with_limit(f, n, DEFAULT_SIZE_LIMIT)
}

pub fn enumerate_paths_with_limit(
    f: &PathFamily,
    n: usize,
    limit: usize,
) -> Result<Vec<DyckPath>, PathError> {
    let requested = n * f.m;
    if requested > limit {
        return Err(PathError::SizeLimitExceeded { requested, limit });
    }
    if n == 0 {
        return Err(PathError::EmptyInput);
    }
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(2 * requested);
    let (up_block, down_block) = match f.kind {
        FamilyKind::Mirrored => (1, f.m),
        _ => (f.m, 1),
    };
    generate(&mut buf, requested, 0, 0, up_block, down_block, &mut out);
    Ok(out)
}

fn generate(
    buf: &mut Vec<Step>,
    total: usize,
    ups: usize,
    downs: usize,
    up_block: usize,
    down_block: usize,
    out: &mut Vec<DyckPath>,
) {
    if downs == total {
        out.push(DyckPath::from_steps_unchecked(buf.clone()));
        return;
    }
    let len = buf.len();
    if ups + up_block <= total {
        buf.extend(std::iter::repeat_n(Step::U, up_block));
        generate(buf, total, ups + up_block, downs, up_block, down_block, out);
        buf.truncate(len);
    }
    if ups >= downs + down_block {
        buf.extend(std::iter::repeat_n(Step::D, down_block));
        generate(buf, total, ups, downs + down_block, up_block, down_block, out);
        buf.truncate(len);
    }
}

/// A weakly decreasing integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonincreasingSequence {
    values: Vec<i64>,
}

impl NonincreasingSequence {
    pub fn new(values: Vec<i64>) -> Option<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(NonincreasingSequence { values })
    }

    pub(crate) fn new_unchecked(values: Vec<i64>) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        NonincreasingSequence { values }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based positions `i` with `u_i > u_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for NonincreasingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for NonincreasingSequence {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PathError::BadSequence(s.to_string()))?;
        NonincreasingSequence::new(values).ok_or_else(|| PathError::BadSequence(s.to_string()))
    }
}

/// Sequence encoding of a family path.
///
/// For m-Dyck (and plain) paths, `u_i` is the number of D steps after the
/// i-th large up step. For mirrored paths, `u_i` is the number of large down
/// steps after the i-th unit up step.
pub fn encode_sequence(p: &DyckPath, f: &PathFamily) -> Result<NonincreasingSequence, PathError> {
    if !in_family(p, f) || !p.size().is_multiple_of(f.m) {
        return Err(PathError::NotInFamily { path: p.to_string(), family: *f });
    }
    let m = f.m;
    let total_downs = p.size();
    let mut downs_seen = 0usize;
    let mut ups_seen = 0usize;
    let mut values = Vec::new();
    for s in p.steps() {
        match s {
            Step::U => {
                ups_seen += 1;
                let remaining = (total_downs - downs_seen) as i64;
                if f.is_mirrored() {
                    values.push(remaining / m as i64);
                } else if ups_seen.is_multiple_of(m) {
                    values.push(remaining);
                }
            }
            Step::D => downs_seen += 1,
        }
    }
    Ok(NonincreasingSequence::new_unchecked(values))
}

/// Checks the family bounds on an encoding of family size `n`.
fn check_bounds(u: &[i64], f: &PathFamily, n: usize) -> Result<(), PathError> {
    let m = f.m as i64;
    let n_i = n as i64;
    for (idx, &ui) in u.iter().enumerate() {
        let i = idx as i64 + 1;
        let ok = if f.is_mirrored() {
            // n - (i-1)/m <= u_i <= n, i.e. m*u_i >= m*n - (i-1)
            m * ui >= m * n_i - (i - 1) && ui <= n_i
        } else {
            m * (n_i - i + 1) <= ui && ui <= m * n_i
        };
        if !ok {
            return Err(PathError::BoundsViolated(format!("u_{i} = {ui}")));
        }
    }
    Ok(())
}

pub fn decode_sequence(u: &NonincreasingSequence, f: &PathFamily) -> Result<DyckPath, PathError> {
    let m = f.m;
    let values = u.values();
    let n = if f.is_mirrored() {
        if values.is_empty() || !values.len().is_multiple_of(m) {
            return Err(PathError::BoundsViolated(format!(
                "length {} is not a positive multiple of m = {m}",
                values.len()
            )));
        }
        values.len() / m
    } else {
        if values.is_empty() {
            return Err(PathError::BoundsViolated("empty sequence".into()));
        }
        values.len()
    };
    check_bounds(values, f, n)?;
    let mut steps = Vec::with_capacity(2 * m * n);
    if f.is_mirrored() {
        let mut remaining = n as i64;
        for &ui in values {
            for _ in 0..(remaining - ui) {
                steps.extend(std::iter::repeat_n(Step::D, m));
            }
            remaining = ui;
            steps.push(Step::U);
        }
        for _ in 0..remaining {
            steps.extend(std::iter::repeat_n(Step::D, m));
        }
    } else {
        let mut remaining = (m * n) as i64;
        for &ui in values {
            steps.extend(std::iter::repeat_n(Step::D, (remaining - ui) as usize));
            remaining = ui;
            steps.extend(std::iter::repeat_n(Step::U, m));
        }
        steps.extend(std::iter::repeat_n(Step::D, remaining as usize));
    }
    DyckPath::from_steps(steps)
}

/// Vertical encoding: the nonincreasing word with `u_i - u_{i+1}` copies of
/// the letter `n + 1 - i` (with `u_{n+1} = 0`).
pub fn vertical_encoding(u: &NonincreasingSequence) -> Result<Vec<u32>, PathError> {
    let values = u.values();
    if values.is_empty() || values.iter().any(|&v| v <= 0) {
        return Err(PathError::NonPositive);
    }
    let n = values.len();
    let mut word = Vec::with_capacity(values[0] as usize);
    for i in 0..n {
        let next = if i + 1 < n { values[i + 1] } else { 0 };
        let letter = (n - i) as u32;
        word.extend(std::iter::repeat_n(letter, (values[i] - next) as usize));
    }
    Ok(word)
}

/// Inverse of [`vertical_encoding`]: `u_i` counts letters `<= n + 1 - i`.
///
/// Returns `None` unless `word` is nonincreasing, uses letters in `1..=n`
/// and contains a 1.
pub fn vertical_decoding(word: &[u32], n: usize) -> Option<NonincreasingSequence> {
    if n == 0
        || word.windows(2).any(|w| w[0] < w[1])
        || word.iter().any(|&l| l == 0 || l as usize > n)
        || !word.contains(&1)
    {
        return None;
    }
    let values = (1..=n)
        .map(|i| word.iter().filter(|&&l| (l as usize) <= n + 1 - i).count() as i64)
        .collect();
    Some(NonincreasingSequence::new_unchecked(values))
}
