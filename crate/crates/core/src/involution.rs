//! A recursive involution on intervals of Dyck paths that exchanges the first
//! ascent of the bottom path with the statistic `r`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::counting::{delete_first_peak, insert_first_peak, insertion_heights};
use crate::paths::{DyckPath, PathFamily};
use crate::poset::{enumerate_intervals_with_limit, Interval, PosetError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("interval of size {0} has no first peak to delete")]
    SizeTooSmall(usize),
    #[error("no legal peak insertion reaches a = {a}, r = {r}")]
    NoSuchInsertion { a: usize, r: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Deletes the first peak of both paths, returning the smaller interval and
/// the pair `(a, r)` of the input.
pub fn delete_first_peaks(iv: &Interval) -> Result<(Interval, usize, usize), InvolutionError> {
    if iv.size() < 2 {
        return Err(InvolutionError::SizeTooSmall(iv.size()));
    }
    let st = iv.stats();
    let sub = Interval::new(delete_first_peak(iv.bottom(), 1), delete_first_peak(iv.top(), 1))?;
    Ok((sub, st.first_ascent_bottom, st.r))
}

/// All intervals one size up obtained by a legal first-peak insertion.
pub fn first_peak_insertions(iv: &Interval) -> Result<Vec<Interval>, InvolutionError> {
    let f = PathFamily::mirrored(1);
    let st = iv.stats();
    let (i, j) = (st.first_ascent_bottom as i64 - 1, st.r as i64 - 1);
    let mut out = Vec::new();
    for k in 0..=i + 1 {
        let lmax = if k == i + 1 { j } else { j + 1 };
        for l in 0..=lmax {
            let (hp, hq) = insertion_heights(iv.bottom(), iv.top(), &f, (i, j), (k, l));
            out.push(Interval::new(insert_first_peak(iv.bottom(), 1, hp), insert_first_peak(iv.top(), 1, hq))?);
        }
    }
    Ok(out)
}

/// The unique legal first-peak insertion with first ascent `a` and statistic `r`.
///
/// # Panics
///
/// If two legal insertions reach the same statistics.
pub fn insert_first_peaks(iv: &Interval, a: usize, r: usize) -> Result<Interval, InvolutionError> {
    let mut hits = first_peak_insertions(iv)?
        .into_iter()
        .filter(|c| c.stats().first_ascent_bottom == a && c.stats().r == r);
    let found = hits.next().ok_or(InvolutionError::NoSuchInsertion { a, r })?;
    assert!(hits.next().is_none(), "two legal insertions into {iv:?} reach a = {a}, r = {r}");
    Ok(found)
}

type Key = (DyckPath, DyckPath);

/// The involution with a memo shared across calls and threads.
#[derive(Debug, Default)]
pub struct Involution {
    memo: Mutex<HashMap<Key, Interval>>,
}

impl Involution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn apply(&self, iv: &Interval) -> Result<Interval, InvolutionError> {
        if iv.size() <= 1 {
            return Ok(iv.clone());
        }
        let key = (iv.bottom().clone(), iv.top().clone());
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let (sub, b, s) = delete_first_peaks(iv)?;
        let image = insert_first_peaks(&self.apply(&sub)?, s, b)?;
        self.memo.lock().expect("memo poisoned").insert(key, image.clone());
        Ok(image)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.lock().expect("memo poisoned").len()
    }
}

pub fn involution_f(iv: &Interval) -> Result<Interval, InvolutionError> {
    Involution::new().apply(iv)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub n: usize,
    pub intervals: usize,
    pub involutive: bool,
    pub exchanges_statistics: bool,
    pub preserves_size: bool,
    /// The joint distribution of `(a, r)` is symmetric.
    pub symmetric_distribution: bool,
}

impl InvolutionReport {
    pub fn ok(&self) -> bool {
        self.involutive && self.exchanges_statistics && self.preserves_size && self.symmetric_distribution
    }
}

/// Checks the involution exhaustively on intervals of size `n`.
pub fn verify_involution(n: usize, limit: usize) -> Result<InvolutionReport, InvolutionError> {
    let ivs = enumerate_intervals_with_limit(&PathFamily::plain(), n, limit)?;
    let inv = Involution::new();
    let checks = ivs
        .par_iter()
        .map(|iv| {
            let fi = inv.apply(iv)?;
            let ffi = inv.apply(&fi)?;
            let (s, t) = (iv.stats(), fi.stats());
            Ok((ffi == *iv, (t.first_ascent_bottom, t.r) == (s.r, s.first_ascent_bottom), fi.size() == iv.size()))
        })
        .collect::<Result<Vec<_>, InvolutionError>>()?;
    let mut dist: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for iv in &ivs {
        *dist.entry((iv.stats().first_ascent_bottom, iv.stats().r)).or_default() += 1;
    }
    Ok(InvolutionReport {
        n,
        intervals: ivs.len(),
        involutive: checks.iter().all(|c| c.0),
        exchanges_statistics: checks.iter().all(|c| c.1),
        preserves_size: checks.iter().all(|c| c.2),
        symmetric_distribution: dist.iter().all(|(&(a, r), v)| dist.get(&(r, a)) == Some(v)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::parse_path;
    use crate::poset::DEFAULT_INTERVAL_LIMIT;

    fn iv(p: &str, q: &str) -> Interval {
        Interval::new(parse_path(p).unwrap(), parse_path(q).unwrap()).unwrap()
    }

    #[test]
    fn deletion() {
        let unit = iv("UD", "UD");
        assert_eq!(delete_first_peaks(&iv("UDUD", "UUDD")).unwrap(), (unit.clone(), 1, 2));
        assert_eq!(delete_first_peaks(&iv("UUDD", "UUDD")).unwrap(), (unit.clone(), 2, 1));
        assert_eq!(delete_first_peaks(&unit), Err(InvolutionError::SizeTooSmall(1)));
    }

    #[test]
    fn insertion() {
        let unit = iv("UD", "UD");
        assert_eq!(insert_first_peaks(&unit, 1, 2).unwrap(), iv("UDUD", "UUDD"));
        assert_eq!(insert_first_peaks(&unit, 2, 1).unwrap(), iv("UUDD", "UUDD"));
        assert_eq!(insert_first_peaks(&unit, 3, 1), Err(InvolutionError::NoSuchInsertion { a: 3, r: 1 }));
        assert_eq!(first_peak_insertions(&unit).unwrap().len(), 3);
    }

    #[test]
    fn small_orbits() {
        let unit = iv("UD", "UD");
        assert_eq!(involution_f(&unit).unwrap(), unit);
        assert_eq!(involution_f(&iv("UDUD", "UUDD")).unwrap(), iv("UUDD", "UUDD"));
        assert_eq!(involution_f(&iv("UUDD", "UUDD")).unwrap(), iv("UDUD", "UUDD"));
        assert_eq!(involution_f(&iv("UDUD", "UDUD")).unwrap(), iv("UDUD", "UDUD"));
    }

    #[test]
    fn exhaustive_small_sizes() {
        for n in 1..=5 {
            let r = verify_involution(n, DEFAULT_INTERVAL_LIMIT).unwrap();
            assert!(r.ok(), "{r:?}");
        }
        assert_eq!(verify_involution(4, DEFAULT_INTERVAL_LIMIT).unwrap().intervals, 69);
    }
}
