//! Words avoiding the patterns `aba` and `acb`, and their correspondence with
//! intervals of nonincreasing sequences.
//!
//! A word `w` over `1..=n` containing a 1 is summarised by two nonincreasing
//! words: `ninc(w)`, its letters sorted, and `low(w)`, its running minimum.
//! Among words sharing both summaries exactly one avoids the two patterns.

use thiserror::Error;

use crate::paths::{
    encode_sequence, vertical_decoding, vertical_encoding, NonincreasingSequence, PathError,
    PathFamily,
};
use crate::poset::{nt_leq, Interval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SylvesterError {
    #[error("word {0:?} is not over 1..={1} with at least one letter 1")]
    NotInWn(Vec<u32>, usize),
    #[error("sequences {0} and {1} do not form an interval")]
    NotAnInterval(String, String),
    #[error("no avoiding word has sorted letters {0:?} and running minimum {1:?}")]
    Infeasible(Vec<u32>, Vec<u32>),
    #[error("bad word: {0}")]
    Parse(String),
    #[error(transparent)]
    Path(#[from] PathError),
}

/// Parses a space- or comma-separated list of positive integers.
pub fn parse_word(text: &str) -> Result<Vec<u32>, SylvesterError> {
    let word = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(SylvesterError::Parse(format!("'{t}' is not a positive integer"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if word.is_empty() {
        return Err(SylvesterError::Parse("empty word".into()));
    }
    Ok(word)
}

pub fn format_word(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

pub fn ninc(w: &[u32]) -> Vec<u32> {
    let mut out = w.to_vec();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn ndec(w: &[u32]) -> Vec<u32> {
    let mut out = w.to_vec();
    out.sort_unstable();
    out
}

/// Running minimum: the largest nonincreasing word below `w`.
pub fn low(w: &[u32]) -> Vec<u32> {
    w.iter()
        .scan(u32::MAX, |m, &x| {
            *m = (*m).min(x);
            Some(*m)
        })
        .collect()
}

/// True iff there are no `i < j < k` with `w_i <= w_k < w_j`.
pub fn avoids_patterns(w: &[u32]) -> bool {
    let mut prefix_min = u32::MAX;
    for j in 0..w.len() {
        let hi = w[j];
        if prefix_min < hi && w[j + 1..].iter().any(|&x| prefix_min <= x && x < hi) {
            return false;
        }
        prefix_min = prefix_min.min(hi);
    }
    true
}

pub fn in_wn(w: &[u32], n: usize) -> bool {
    n > 0 && w.contains(&1) && w.iter().all(|&l| l >= 1 && l as usize <= n)
}

/// The avoiding word with `ninc(w) = w1` and `low(w) = w2`.
///
/// Strict left-to-right minima of `w2` stay in place. Each gap between them
/// is filled, in nondecreasing order, with the smallest unused letters of
/// `w1` that are at least the current minimum.
pub fn reconstruct(w1: &[u32], w2: &[u32]) -> Result<Vec<u32>, SylvesterError> {
    let infeasible = || SylvesterError::Infeasible(w1.to_vec(), w2.to_vec());
    if w1.len() != w2.len() || w1.windows(2).any(|p| p[0] < p[1]) || w2.windows(2).any(|p| p[0] < p[1]) {
        return Err(infeasible());
    }
    let len = w1.len();
    let is_min: Vec<bool> = (0..len).map(|i| i == 0 || w2[i] < w2[i - 1]).collect();

    // remaining letters as a sorted multiset
    let mut pool = ndec(w1);
    for i in (0..len).filter(|&i| is_min[i]) {
        let pos = pool.binary_search(&w2[i]).map_err(|_| infeasible())?;
        pool.remove(pos);
    }

    let mut out = w2.to_vec();
    let mut i = 0;
    while i < len {
        if is_min[i] {
            i += 1;
            continue;
        }
        let end = (i..len).find(|&k| is_min[k]).unwrap_or(len);
        let gap = end - i;
        let start = pool.partition_point(|&x| x < w2[i]);
        if pool.len() - start < gap {
            return Err(infeasible());
        }
        out[i..end].copy_from_slice(&pool[start..start + gap]);
        pool.drain(start..start + gap);
        i = end;
    }

    if ninc(&out) != w1 || low(&out) != w2 || !avoids_patterns(&out) {
        return Err(infeasible());
    }
    Ok(out)
}

pub fn phi(w: &[u32], n: usize) -> Result<(NonincreasingSequence, NonincreasingSequence), SylvesterError> {
    let not_in = || SylvesterError::NotInWn(w.to_vec(), n);
    if !in_wn(w, n) {
        return Err(not_in());
    }
    let u = vertical_decoding(&ninc(w), n).ok_or_else(not_in)?;
    let v = vertical_decoding(&low(w), n).ok_or_else(not_in)?;
    Ok((u, v))
}

/// Inverse of [`phi`] on avoiding words.
pub fn psi(u: &NonincreasingSequence, v: &NonincreasingSequence, n: usize) -> Result<Vec<u32>, SylvesterError> {
    let (a, b) = (u.values(), v.values());
    let valid = a.len() == n
        && b.len() == n
        && n > 0
        && a[0] == b[0]
        && a.iter().chain(b).all(|&x| x > 0)
        && nt_leq(u, v);
    if !valid {
        return Err(SylvesterError::NotAnInterval(u.to_string(), v.to_string()));
    }
    reconstruct(&vertical_encoding(u)?, &vertical_encoding(v)?)
}

/// Alphabet size used for the words of a family of size `n`.
pub fn alphabet_size(f: &PathFamily, n: usize) -> usize {
    if f.is_mirrored() {
        f.m() * n
    } else {
        n
    }
}

/// Canonical word of the sylvester class attached to an interval.
pub fn interval_to_sylvester(iv: &Interval, f: &PathFamily) -> Result<Vec<u32>, SylvesterError> {
    let u = encode_sequence(iv.bottom(), f)?;
    let v = encode_sequence(iv.top(), f)?;
    psi(&u, &v, alphabet_size(f, f.size_of(iv.bottom())))
}

/// `ninc(w)` lies componentwise below the largest sorted word allowed for
/// intervals of `f` at size `n`: `n^m ... 1^m` for m-Dyck paths and
/// `((n-1)m+1) ... (m+1) 1` for mirrored ones.
pub fn satisfies_family_bound(w: &[u32], f: &PathFamily, n: usize) -> bool {
    let m = f.m();
    let bound: Vec<u32> = if f.is_mirrored() {
        (0..n).rev().map(|i| (i * m + 1) as u32).collect()
    } else {
        (1..=n).rev().flat_map(|l| std::iter::repeat_n(l as u32, m)).collect()
    };
    w.len() == bound.len() && ninc(w).iter().zip(&bound).all(|(a, b)| a <= b)
}

/// Representatives of classes of m-parking functions of length `n`.
pub fn is_parking_class_rep(w: &[u32], m: usize, n: usize) -> bool {
    w.len() == n
        && avoids_patterns(w)
        && ndec(w).iter().enumerate().all(|(i, &l)| l >= 1 && l as usize <= i * m + 1)
}

/// All avoiding words that represent classes of m-parking functions of length `n`.
pub fn parking_class_reps(m: usize, n: usize) -> Vec<Vec<u32>> {
    fn rec(m: usize, n: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            if is_parking_class_rep(cur, m, n) {
                out.push(cur.clone());
            }
            return;
        }
        if !avoids_patterns(cur) {
            return;
        }
        for l in 1..=((n - 1) * m + 1) as u32 {
            cur.push(l);
            rec(m, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(m, n, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::parse_path;
    use crate::poset::enumerate_intervals;
    use std::collections::HashSet;

    fn seq(v: &[i64]) -> NonincreasingSequence {
        NonincreasingSequence::new(v.to_vec()).unwrap()
    }

    fn word(s: &str) -> Vec<u32> {
        parse_word(s).unwrap()
    }

    fn avoids_cubic(w: &[u32]) -> bool {
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if w[i] <= w[k] && w[k] < w[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn all_words(len: usize, n: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u32>| {
                    (1..=n).map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(word("3 2 2 2 2 5 1 1 1 5"), vec![3, 2, 2, 2, 2, 5, 1, 1, 1, 5]);
        assert_eq!(word("2,2,1,4"), vec![2, 2, 1, 4]);
        assert!(parse_word("1 0").is_err());
        assert!(parse_word("").is_err());
        assert_eq!(format_word(&[2, 2, 1, 4]), "2 2 1 4");
    }

    #[test]
    fn sorting_and_low() {
        let w = word("3 2 2 2 2 5 1 1 1 5");
        assert_eq!(ninc(&w), word("5 5 3 2 2 2 2 1 1 1"));
        assert_eq!(ninc(&[7]), vec![7]);
        assert_eq!(ndec(&[2, 2, 1, 4]), vec![1, 2, 2, 4]);
        assert_eq!(low(&word("6 8 7 4 5 2 3 1 9")), word("6 6 6 4 4 2 2 1 1"));
        assert_eq!(low(&w), word("3 2 2 2 2 2 1 1 1 1"));
        assert_eq!(low(&[4, 4, 2, 1]), vec![4, 4, 2, 1]);
    }

    #[test]
    fn pattern_examples() {
        assert!(avoids_patterns(&word("3 2 2 2 2 5 1 1 1 5")));
        assert!(!avoids_patterns(&[1, 3, 2]));
        assert!(!avoids_patterns(&[1, 2, 1]));
        assert!(avoids_patterns(&[2, 2, 1, 4]));
    }

    #[test]
    fn pattern_check_matches_cubic_scan() {
        for len in 0..=6 {
            for w in all_words(len, 4) {
                assert_eq!(avoids_patterns(&w), avoids_cubic(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn reconstruct_examples() {
        assert_eq!(
            reconstruct(&word("5 5 3 2 2 2 2 1 1 1"), &word("3 2 2 2 2 2 1 1 1 1")).unwrap(),
            word("3 2 2 2 2 5 1 1 1 5")
        );
        assert_eq!(reconstruct(&[4, 2, 2, 1], &[2, 2, 1, 1]).unwrap(), vec![2, 2, 1, 4]);
        assert_eq!(reconstruct(&[3, 3, 1], &[3, 3, 1]).unwrap(), vec![3, 3, 1]);
        assert!(matches!(reconstruct(&[2, 1], &[3, 1]), Err(SylvesterError::Infeasible(..))));
        assert_eq!(reconstruct(&[2, 2, 1], &[2, 1, 1]).unwrap(), vec![2, 1, 2]);
        assert!(matches!(reconstruct(&[1, 1], &[2, 1]), Err(SylvesterError::Infeasible(..))));
    }

    #[test]
    fn phi_psi_examples() {
        let w = word("3 2 2 2 2 5 1 1 1 5");
        let (u, v) = phi(&w, 6).unwrap();
        assert_eq!(u, seq(&[10, 10, 8, 8, 7, 3]));
        assert_eq!(v, seq(&[10, 10, 10, 10, 9, 4]));
        assert_eq!(psi(&u, &v, 6).unwrap(), w);

        let (u, v) = phi(&[2, 2, 1, 4], 4).unwrap();
        assert_eq!((u.clone(), v.clone()), (seq(&[4, 3, 3, 1]), seq(&[4, 4, 4, 2])));
        assert_eq!(psi(&u, &v, 4).unwrap(), vec![2, 2, 1, 4]);

        let (u, v) = phi(&[3, 3, 1], 3).unwrap();
        assert_eq!(u, v);
        assert_eq!(psi(&u, &u, 3).unwrap(), vertical_encoding(&u).unwrap());

        assert!(matches!(phi(&[2, 2], 3), Err(SylvesterError::NotInWn(..))));
        assert!(matches!(phi(&[1, 4], 3), Err(SylvesterError::NotInWn(..))));
        assert!(matches!(
            psi(&seq(&[4, 4, 4, 2]), &seq(&[4, 3, 3, 1]), 4),
            Err(SylvesterError::NotAnInterval(..))
        ));
    }

    #[test]
    fn psi_inverts_phi_on_avoiding_words() {
        for n in 1..=4usize {
            for len in 1..=8 {
                if len > 6 && n > 3 {
                    continue;
                }
                for w in all_words(len, n as u32) {
                    if !in_wn(&w, n) || !avoids_patterns(&w) {
                        continue;
                    }
                    let (u, v) = phi(&w, n).unwrap();
                    assert!(nt_leq(&u, &v));
                    assert_eq!(psi(&u, &v, n).unwrap(), w);
                }
            }
        }
    }

    fn positive_sequences(n: usize, top: i64) -> Vec<Vec<i64>> {
        let mut seqs = vec![vec![top]];
        for _ in 1..n {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    let last = *s.last().unwrap();
                    (1..=last).map(move |x| {
                        let mut t = s.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        seqs
    }

    #[test]
    fn phi_inverts_psi_on_intervals() {
        for n in 1..=4usize {
            for top in 1..=8i64 {
                let seqs: Vec<_> = positive_sequences(n, top).into_iter().map(|s| seq(&s)).collect();
                for u in &seqs {
                    for v in seqs.iter().filter(|v| nt_leq(u, v)) {
                        let w = psi(u, v, n).unwrap();
                        assert_eq!(phi(&w, n).unwrap(), (u.clone(), v.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn interval_word_examples() {
        let f = PathFamily::plain();
        let iv = Interval::new(parse_path("UDUUDDUD").unwrap(), parse_path("UUUDDUDD").unwrap()).unwrap();
        assert_eq!(interval_to_sylvester(&iv, &f).unwrap(), vec![2, 2, 1, 4]);
        let q = parse_path("UUDUDD").unwrap();
        let iv = Interval::new(q.clone(), q.clone()).unwrap();
        assert_eq!(
            interval_to_sylvester(&iv, &f).unwrap(),
            vertical_encoding(&encode_sequence(&q, &f).unwrap()).unwrap()
        );
        let words: HashSet<_> = enumerate_intervals(&f, 3)
            .unwrap()
            .iter()
            .map(|iv| interval_to_sylvester(iv, &f).unwrap())
            .collect();
        assert_eq!(words.len(), 13);
        assert!(words.iter().all(|w| satisfies_family_bound(w, &f, 3)));
    }

    #[test]
    fn interval_words_are_injective() {
        let cases = [
            (PathFamily::plain(), 6),
            (PathFamily::mdyck(2), 4),
            (PathFamily::mirrored(2), 4),
        ];
        for (f, nmax) in cases {
            for n in 1..=nmax {
                let ivs = enumerate_intervals(&f, n).unwrap();
                let words: HashSet<_> = ivs.iter().map(|iv| interval_to_sylvester(iv, &f).unwrap()).collect();
                assert_eq!(words.len(), ivs.len(), "{f} n={n}");
                assert!(words.iter().all(|w| satisfies_family_bound(w, &f, n)));
            }
        }
    }

    #[test]
    fn mirrored_images_are_parking_reps() {
        let m = 2;
        let f = PathFamily::mirrored(m);
        for n in 1..=3 {
            let image: HashSet<_> = enumerate_intervals(&f, n)
                .unwrap()
                .iter()
                .map(|iv| interval_to_sylvester(iv, &f).unwrap())
                .collect();
            let reps: HashSet<_> = parking_class_reps(m, n).into_iter().collect();
            assert_eq!(image, reps, "n={n}");
        }
    }

    #[test]
    fn parking_rep_examples() {
        assert!(is_parking_class_rep(&[1, 1], 1, 2));
        assert!(is_parking_class_rep(&[2, 2, 1, 4], 1, 4));
        assert!(!is_parking_class_rep(&[2, 2], 1, 2));
        assert!(!is_parking_class_rep(&[1, 3, 2], 2, 3));
        assert_eq!(parking_class_reps(2, 3).len(), 40);
        assert_eq!(parking_class_reps(1, 3).len(), 13);
        assert_eq!(parking_class_reps(1, 4).len(), 69);
    }
}
