//! The ascent order on Dyck paths and its restrictions to the path families.
//!
//! `P <= Q` iff `P` lies weakly below `Q` and the ascent composition of `P`
//! refines that of `Q`. Covers rewrite a factor `D U^k D` into `U^k D D`
//! (with large down steps `D^m` in the mirrored family).

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::paths::{
    ascent_composition, decode_sequence, encode_sequence, enumerate_paths_with_limit, in_family,
    Composition, DyckPath, NonincreasingSequence, PathError, PathFamily, Step,
};

/// Default bound on `n * m` for brute-force interval enumeration.
pub const DEFAULT_INTERVAL_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("paths have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("{bottom} and {top} have no greatest lower bound in {family}")]
    NoMeet { bottom: String, top: String, family: PathFamily },
    #[error("{bottom} is not below {top} in the ascent order")]
    NotAnInterval { bottom: String, top: String },
}

fn same_size(p: &DyckPath, q: &DyckPath) -> Result<(), PosetError> {
    if p.size() != q.size() {
        return Err(PosetError::SizeMismatch(p.size(), q.size()));
    }
    Ok(())
}

/// Weak-below relation: every prefix of `p` has at most as many U steps as
/// the prefix of `q` of the same length.
pub fn lies_below(p: &DyckPath, q: &DyckPath) -> Result<bool, PosetError> {
    same_size(p, q)?;
    Ok(lies_below_unchecked(p, q))
}

fn lies_below_unchecked(p: &DyckPath, q: &DyckPath) -> bool {
    let (mut a, mut b) = (0usize, 0usize);
    for (x, y) in p.steps().iter().zip(q.steps()) {
        a += (*x == Step::U) as usize;
        b += (*y == Step::U) as usize;
        if a > b {
            return false;
        }
    }
    true
}

/// `c` refines `d` iff every partial sum of `d` is a partial sum of `c`.
pub fn refines(c: &Composition, d: &Composition) -> bool {
    refines_parts(c.parts(), d.parts())
}

fn refines_parts(c: &[usize], d: &[usize]) -> bool {
    if c.iter().sum::<usize>() != d.iter().sum::<usize>() {
        return false;
    }
    let mut ci = c.iter();
    let mut acc = 0;
    for &target in d {
        let goal = acc + target;
        while acc < goal {
            match ci.next() {
                Some(p) => acc += p,
                None => return false,
            }
        }
        if acc != goal {
            return false;
        }
    }
    true
}

pub fn leq(p: &DyckPath, q: &DyckPath) -> Result<bool, PosetError> {
    same_size(p, q)?;
    Ok(leq_unchecked(p, q))
}

pub(crate) fn leq_unchecked(p: &DyckPath, q: &DyckPath) -> bool {
    lies_below_unchecked(p, q) && refines_parts(&p.ascent_lengths(), &q.ascent_lengths())
}

/// Starting indices of ascents that are preceded by a D step.
fn inner_ascents(p: &DyckPath) -> Vec<(usize, usize)> {
    let steps = p.steps();
    let mut out = Vec::new();
    let mut i = 1;
    while i < steps.len() {
        if steps[i] == Step::U && steps[i - 1] == Step::D {
            let k = steps[i..].iter().take_while(|s| **s == Step::U).count();
            out.push((i, k));
            i += k;
        } else {
            i += 1;
        }
    }
    out
}

/// Moves the ascent starting at `start` (length `k`) to the left of the `block`
/// down steps preceding it: `D^block U^k -> U^k D^block`.
fn rewrite(p: &DyckPath, start: usize, k: usize, block: usize) -> Option<DyckPath> {
    let steps = p.steps();
    if start < block || steps[start - block..start].iter().any(|s| *s != Step::D) {
        return None;
    }
    let mut out = Vec::with_capacity(steps.len());
    out.extend_from_slice(&steps[..start - block]);
    out.extend(std::iter::repeat_n(Step::U, k));
    out.extend(std::iter::repeat_n(Step::D, block));
    out.extend_from_slice(&steps[start + k..]);
    Some(DyckPath::from_steps_unchecked(out))
}

/// Upper covers of `p` in the ascent order on all Dyck paths.
pub fn covers(p: &DyckPath) -> Vec<DyckPath> {
    inner_ascents(p)
        .into_iter()
        .filter_map(|(s, k)| rewrite(p, s, k, 1))
        .collect()
}

/// Upper covers of `p` inside its family. For mirrored paths the moved down
/// step is a large one.
pub fn family_covers(p: &DyckPath, f: &PathFamily) -> Vec<DyckPath> {
    let block = if f.is_mirrored() { f.m() } else { 1 };
    inner_ascents(p)
        .into_iter()
        .filter_map(|(s, k)| rewrite(p, s, k, block))
        .collect()
}

/// Applies the unit cover rule at the valley whose D step sits at `index`.
pub fn cover_at_valley(p: &DyckPath, index: usize) -> Option<DyckPath> {
    let steps = p.steps();
    if index + 1 >= steps.len() || steps[index] != Step::D || steps[index + 1] != Step::U {
        return None;
    }
    let k = steps[index + 1..].iter().take_while(|s| **s == Step::U).count();
    rewrite(p, index + 1, k, 1)
}

/// Positions `i` such that steps `i, i+1` form a valley `DU`.
pub fn valleys(p: &DyckPath) -> Vec<usize> {
    p.steps()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::D && w[1] == Step::U)
        .map(|(i, _)| i)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct HasseDiagram {
    pub family: PathFamily,
    pub n: usize,
    pub nodes: Vec<DyckPath>,
    /// Cover pairs `(lower, upper)` as indices into `nodes`.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph ascent {\n");
        for node in &self.nodes {
            let _ = writeln!(out, "  \"{node}\";");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.nodes[*a], self.nodes[*b]);
        }
        out.push_str("}\n");
        out
    }

    /// Indices of nodes with no lower cover.
    pub fn minimal_indices(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.nodes.len()];
        for (_, b) in &self.edges {
            has_lower[*b] = true;
        }
        (0..self.nodes.len()).filter(|i| !has_lower[*i]).collect()
    }
}

pub fn hasse(f: &PathFamily, n: usize) -> Result<HasseDiagram, PosetError> {
    hasse_with_limit(f, n, crate::paths::DEFAULT_SIZE_LIMIT)
}

pub fn hasse_with_limit(f: &PathFamily, n: usize, limit: usize) -> Result<HasseDiagram, PosetError> {
    let nodes = enumerate_paths_with_limit(f, n, limit)?;
    let index: HashMap<&DyckPath, usize> = nodes.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut edges = Vec::new();
    for (i, p) in nodes.iter().enumerate() {
        for q in family_covers(p, f) {
            let j = *index.get(&q).expect("family covers stay in the family");
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    Ok(HasseDiagram { family: *f, n, nodes, edges })
}

pub fn minimal_elements(f: &PathFamily, n: usize) -> Result<Vec<DyckPath>, PosetError> {
    let h = hasse(f, n)?;
    Ok(h.minimal_indices().into_iter().map(|i| h.nodes[i].clone()).collect())
}

/// The ordered set of one family at a fixed size with its full order
/// relation precomputed, for brute-force bounds.
pub struct FamilyPoset {
    pub family: PathFamily,
    pub nodes: Vec<DyckPath>,
    index: HashMap<DyckPath, usize>,
    order: Vec<Vec<bool>>,
}

impl FamilyPoset {
    pub fn new(f: &PathFamily, n: usize, limit: usize) -> Result<Self, PosetError> {
        let nodes = enumerate_paths_with_limit(f, n, limit)?;
        let order = nodes
            .par_iter()
            .map(|p| nodes.iter().map(|q| leq_unchecked(p, q)).collect())
            .collect();
        let index = nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Ok(FamilyPoset { family: *f, nodes, index, order })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, p: &DyckPath) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order[i][j]
    }

    pub fn least_upper_bound(&self, i: usize, j: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect();
        ub.iter().copied().find(|&c| ub.iter().all(|&k| self.leq(c, k)))
    }

    pub fn greatest_lower_bound(&self, i: usize, j: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect();
        lb.iter().copied().find(|&c| lb.iter().all(|&k| self.leq(k, c)))
    }
}

/// Componentwise order plus inclusion of descent sets (descents of `v` must
/// be descents of `u`).
pub fn nt_leq(u: &NonincreasingSequence, v: &NonincreasingSequence) -> bool {
    let (a, b) = (u.values(), v.values());
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| x <= y)
        && (0..a.len().saturating_sub(1)).all(|i| b[i] <= b[i + 1] || a[i] > a[i + 1])
}

/// Join of two sequences of equal length: the componentwise smallest
/// nonincreasing sequence above both whose descents are common descents of
/// `u` and `v`. Positions that are not common descents force equality with
/// the next entry, so each block takes the max of its first entries.
pub fn nt_join(u: &NonincreasingSequence, v: &NonincreasingSequence) -> NonincreasingSequence {
    let (a, b) = (u.values(), v.values());
    assert_eq!(a.len(), b.len());
    let len = a.len();
    let mut w = vec![0i64; len];
    let mut block_value = a[0].max(b[0]);
    for i in 0..len {
        if i > 0 && a[i - 1] > a[i] && b[i - 1] > b[i] {
            block_value = a[i].max(b[i]);
        }
        w[i] = block_value;
    }
    NonincreasingSequence::new_unchecked(w)
}

fn check_member(p: &DyckPath, f: &PathFamily) -> Result<(), PosetError> {
    if !in_family(p, f) || !p.size().is_multiple_of(f.m()) {
        return Err(PathError::NotInFamily { path: p.to_string(), family: *f }.into());
    }
    Ok(())
}

pub fn join(p: &DyckPath, q: &DyckPath, f: &PathFamily) -> Result<DyckPath, PosetError> {
    same_size(p, q)?;
    check_member(p, f)?;
    check_member(q, f)?;
    let u = encode_sequence(p, f)?;
    let v = encode_sequence(q, f)?;
    Ok(decode_sequence(&nt_join(&u, &v), f)?)
}

/// Greatest lower bound by brute force over the family.
///
/// # Panics
///
/// If a lattice family (plain or m-Dyck) fails to have a meet.
pub fn meet(p: &DyckPath, q: &DyckPath, f: &PathFamily) -> Result<DyckPath, PosetError> {
    same_size(p, q)?;
    check_member(p, f)?;
    check_member(q, f)?;
    let n = f.size_of(p);
    let poset = FamilyPoset::new(f, n, crate::paths::DEFAULT_SIZE_LIMIT)?;
    let i = poset.index_of(p).expect("member");
    let j = poset.index_of(q).expect("member");
    match poset.greatest_lower_bound(i, j) {
        Some(k) => Ok(poset.nodes[k].clone()),
        None => {
            assert!(!f.is_lattice(), "{f} must be a lattice but {p} and {q} have no meet");
            Err(PosetError::NoMeet { bottom: p.to_string(), top: q.to_string(), family: *f })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IntervalStats {
    pub final_descent_bottom: usize,
    pub final_descent_top: usize,
    pub first_ascent_bottom: usize,
    /// The `r` with `c_1 + ... + c_r = d_1` for ascent compositions `c`, `d`
    /// of bottom and top.
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    bottom: DyckPath,
    top: DyckPath,
    stats: IntervalStats,
}

impl Interval {
    pub fn new(bottom: DyckPath, top: DyckPath) -> Result<Self, PosetError> {
        if !leq(&bottom, &top)? {
            return Err(PosetError::NotAnInterval { bottom: bottom.to_string(), top: top.to_string() });
        }
        Ok(Interval::new_unchecked(bottom, top))
    }

    pub(crate) fn new_unchecked(bottom: DyckPath, top: DyckPath) -> Self {
        debug_assert!(leq_unchecked(&bottom, &top));
        let c = bottom.ascent_lengths();
        let d1 = top.first_ascent();
        let mut acc = 0;
        let mut r = 0;
        while acc < d1 {
            acc += c[r];
            r += 1;
        }
        let stats = IntervalStats {
            final_descent_bottom: bottom.final_descent(),
            final_descent_top: top.final_descent(),
            first_ascent_bottom: c[0],
            r,
        };
        Interval { bottom, top, stats }
    }

    pub fn bottom(&self) -> &DyckPath {
        &self.bottom
    }

    pub fn top(&self) -> &DyckPath {
        &self.top
    }

    pub fn stats(&self) -> &IntervalStats {
        &self.stats
    }

    pub fn size(&self) -> usize {
        self.bottom.size()
    }
}

pub fn enumerate_intervals(f: &PathFamily, n: usize) -> Result<Vec<Interval>, PosetError> {
    enumerate_intervals_with_limit(f, n, DEFAULT_INTERVAL_LIMIT)
}

pub fn enumerate_intervals_with_limit(
    f: &PathFamily,
    n: usize,
    limit: usize,
) -> Result<Vec<Interval>, PosetError> {
    let paths = enumerate_paths_with_limit(f, n, limit)?;
    let compositions: Vec<Vec<usize>> = paths.iter().map(|p| p.ascent_lengths()).collect();
    let out = (0..paths.len())
        .into_par_iter()
        .map(|i| {
            (0..paths.len())
                .filter(|&j| {
                    lies_below_unchecked(&paths[i], &paths[j])
                        && refines_parts(&compositions[i], &compositions[j])
                })
                .map(|j| Interval::new_unchecked(paths[i].clone(), paths[j].clone()))
                .collect::<Vec<_>>()
        })
        .flatten()
        .collect();
    Ok(out)
}

/// Comparable with [`ascent_composition`] for callers that already have compositions.
pub fn refines_paths(p: &DyckPath, q: &DyckPath) -> bool {
    refines(&ascent_composition(p), &ascent_composition(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_paths, fuss_catalan, parse_path};

    fn p(s: &str) -> DyckPath {
        parse_path(s).unwrap()
    }

    fn comp(v: &[usize]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    fn unit_power(word: &str, times: usize) -> DyckPath {
        p(&word.repeat(times))
    }

    #[test]
    fn lies_below_examples() {
        assert!(lies_below(&p("UDUD"), &p("UDUD")).unwrap());
        assert!(lies_below(&p("UDUD"), &p("UUDD")).unwrap());
        assert!(!lies_below(&p("UUDD"), &p("UDUD")).unwrap());
        assert_eq!(lies_below(&p("UD"), &p("UUDD")), Err(PosetError::SizeMismatch(1, 2)));
    }

    #[test]
    fn refines_examples() {
        assert!(refines(&comp(&[2, 2, 2]), &comp(&[2, 4])));
        assert!(!refines(&comp(&[2, 4]), &comp(&[2, 2, 2])));
        assert!(refines(&comp(&[1, 3, 2]), &comp(&[1, 3, 2])));
        assert!(!refines(&comp(&[1, 2]), &comp(&[1, 1])));
        assert!(!refines(&comp(&[2, 2]), &comp(&[1, 3])));
    }

    #[test]
    fn leq_examples() {
        assert!(leq(&p("UUDUUDUUDDDD"), &p("UUDUUUUDDDDD")).unwrap());
        assert!(!leq(&p("UUDD"), &p("UDUD")).unwrap());
        for n in 1..=7 {
            assert!(leq(&unit_power("UD", n), &DyckPath::pyramid(n)).unwrap());
        }
        assert!(leq(&p("UD"), &p("UUDD")).is_err());
    }

    #[test]
    fn cover_examples() {
        assert!(covers(&p("UUDUUDUUDDDD")).contains(&p("UUDUUUUDDDDD")));
        assert!(covers(&DyckPath::pyramid(5)).is_empty());
        assert_eq!(covers(&p("UDUD")), vec![p("UUDD")]);
        // the trailing D of the factor may be the final step
        assert_eq!(covers(&p("UDUUDD")), vec![p("UUUDDD")]);
    }

    #[test]
    fn hasse_examples() {
        let h = hasse(&PathFamily::plain(), 4).unwrap();
        assert_eq!(h.nodes.len(), 14);
        let mins = h.minimal_indices();
        assert_eq!(mins.len(), 1);
        assert_eq!(h.nodes[mins[0]], unit_power("UD", 4));
        let mut has_upper = vec![false; h.nodes.len()];
        for (a, _) in &h.edges {
            has_upper[*a] = true;
        }
        let maxs: Vec<_> = (0..h.nodes.len()).filter(|i| !has_upper[*i]).collect();
        assert_eq!(maxs.len(), 1);
        assert_eq!(h.nodes[maxs[0]], DyckPath::pyramid(4));

        let h = hasse(&PathFamily::mirrored(2), 3).unwrap();
        assert_eq!(h.nodes.len(), 12);
        assert_eq!(h.minimal_indices().len(), 5);

        let h = hasse(&PathFamily::plain(), 1).unwrap();
        assert_eq!((h.nodes.len(), h.edges.len()), (1, 0));
    }

    #[test]
    fn dot_output() {
        let h = hasse(&PathFamily::plain(), 2).unwrap();
        assert_eq!(h.to_dot(), "digraph ascent {\n  \"UUDD\";\n  \"UDUD\";\n  \"UDUD\" -> \"UUDD\";\n}\n");
    }

    /// Reflexive-transitive closure of the Hasse edges, as a boolean matrix.
    fn closure(h: &HasseDiagram) -> Vec<Vec<bool>> {
        let n = h.nodes.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in &h.edges {
            up[*a].push(*b);
        }
        (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                let mut stack = vec![s];
                seen[s] = true;
                while let Some(v) = stack.pop() {
                    for &w in &up[v] {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    fn families_small() -> Vec<(PathFamily, usize)> {
        vec![
            (PathFamily::plain(), 6),
            (PathFamily::mdyck(2), 4),
            (PathFamily::mirrored(2), 4),
            (PathFamily::mirrored(3), 3),
        ]
    }

    #[test]
    fn order_is_closure_of_covers() {
        for (f, nmax) in families_small() {
            for n in 1..=nmax {
                let h = hasse(&f, n).unwrap();
                let cl = closure(&h);
                for (i, a) in h.nodes.iter().enumerate() {
                    for (j, b) in h.nodes.iter().enumerate() {
                        assert_eq!(cl[i][j], leq(a, b).unwrap(), "{f} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn covers_are_covers() {
        // no element strictly between P and a returned cover
        for (f, nmax) in families_small() {
            for n in 1..=nmax.min(4) {
                let paths = enumerate_paths(&f, n).unwrap();
                for a in &paths {
                    for b in family_covers(a, &f) {
                        assert!(leq(a, &b).unwrap() && a != &b);
                        assert!(!paths.iter().any(|c| c != a
                            && c != &b
                            && leq(a, c).unwrap()
                            && leq(c, &b).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn first_differing_valley_moves_towards_top() {
        for (f, nmax) in [(PathFamily::plain(), 6), (PathFamily::mdyck(2), 4)] {
            for n in 1..=nmax {
                let paths = enumerate_paths(&f, n).unwrap();
                for a in &paths {
                    for b in &paths {
                        if a == b || !leq(a, b).unwrap() {
                            continue;
                        }
                        // valleys inside the common prefix are shared with b
                        let lcp = a.steps().iter().zip(b.steps()).take_while(|(x, y)| x == y).count();
                        let v = valleys(a).into_iter().find(|v| *v >= lcp).unwrap();
                        let a2 = cover_at_valley(a, v).unwrap();
                        assert!(covers(a).contains(&a2));
                        assert!(leq(&a2, b).unwrap(), "{a} {b} {a2}");
                    }
                }
            }
        }
    }

    #[test]
    fn nt_join_example() {
        let u = NonincreasingSequence::new(vec![4, 4, 2, 2]).unwrap();
        let v = NonincreasingSequence::new(vec![4, 4, 3, 1]).unwrap();
        assert_eq!(nt_join(&u, &v).values(), &[4, 4, 3, 3]);
        let u = NonincreasingSequence::new(vec![3, 3, 2, 2, 2, 1]).unwrap();
        let v = NonincreasingSequence::new(vec![3, 3, 3, 3, 1, 1]).unwrap();
        assert_eq!(nt_join(&u, &v).values(), &[3; 6]);
    }

    #[test]
    fn join_examples() {
        let f = PathFamily::plain();
        assert_eq!(join(&p("UUDDUUDD"), &p("UUDUDDUD"), &f).unwrap(), p("UUDUUDDD"));
        assert_eq!(join(&p("UUDDUUDD"), &p("UUDDUUDD"), &f).unwrap(), p("UUDDUUDD"));
        let g = PathFamily::mirrored(2);
        let a = p("UUDDUUUDDUDD");
        let b = p("UUUUDDDDUUDD");
        assert_eq!(join(&a, &b, &g).unwrap(), p("UUUUUUDDDDDD"));
        assert!(matches!(join(&p("UDUD"), &p("UUDD"), &PathFamily::mdyck(2)), Err(PosetError::Path(_))));
    }

    #[test]
    fn join_is_brute_force_lub() {
        for (f, nmax) in families_small() {
            for n in 1..=nmax {
                let poset = FamilyPoset::new(&f, n, 30).unwrap();
                for i in 0..poset.len() {
                    for j in 0..poset.len() {
                        let a = &poset.nodes[i];
                        let b = &poset.nodes[j];
                        let w = join(a, b, &f).unwrap();
                        let lub = poset.least_upper_bound(i, j).expect("join semilattice");
                        assert_eq!(w, poset.nodes[lub], "{f}: {a} v {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn join_laws() {
        let f = PathFamily::plain();
        let paths = enumerate_paths(&f, 4).unwrap();
        for a in &paths {
            assert_eq!(&join(a, a, &f).unwrap(), a);
            for b in &paths {
                let ab = join(a, b, &f).unwrap();
                assert_eq!(ab, join(b, a, &f).unwrap());
                for c in &paths {
                    assert_eq!(
                        join(&ab, c, &f).unwrap(),
                        join(a, &join(b, c, &f).unwrap(), &f).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn meet_examples() {
        let f = PathFamily::plain();
        let a = p("UUDDUUDD");
        assert_eq!(meet(&a, &a, &f).unwrap(), a);
        // hand-derived from the sequence side: (4,4,2,1) is the greatest
        // sequence below (4,4,2,2) and (4,4,3,1) with descents {2,3}
        assert_eq!(meet(&a, &p("UUDUDDUD"), &f).unwrap(), p("UUDDUDUD"));

        let g = PathFamily::mirrored(2);
        let mins = minimal_elements(&g, 3).unwrap();
        assert!(matches!(meet(&mins[0], &mins[1], &g), Err(PosetError::NoMeet { .. })));
    }

    #[test]
    fn minimal_element_counts() {
        for m in 2..=3 {
            for n in 1..=4 {
                let f = PathFamily::mirrored(m);
                let mins = minimal_elements(&f, n).unwrap();
                assert_eq!(mins.len(), usize::try_from(fuss_catalan(m - 1, n)).unwrap());
                // minimal iff every descent is a single large step
                for q in enumerate_paths(&f, n).unwrap() {
                    let single = q.descent_lengths().iter().all(|d| *d == m);
                    assert_eq!(mins.contains(&q), single);
                }
            }
        }
        for m in 1..=3 {
            for n in 1..=4 {
                let mins = minimal_elements(&PathFamily::mdyck(m), n).unwrap();
                let expected = p(&format!("{}{}", "U".repeat(m), "D".repeat(m)).repeat(n));
                assert_eq!(mins, vec![expected]);
            }
        }
        assert_eq!(minimal_elements(&PathFamily::plain(), 4).unwrap(), vec![unit_power("UD", 4)]);
    }

    #[test]
    fn mdyck_matches_nt_interval() {
        // the encoding is an order isomorphism onto its image
        for (f, n) in [(PathFamily::mdyck(2), 4), (PathFamily::plain(), 5), (PathFamily::mirrored(2), 3)] {
            let paths = enumerate_paths(&f, n).unwrap();
            let seqs: Vec<_> = paths.iter().map(|q| encode_sequence(q, &f).unwrap()).collect();
            for (a, u) in paths.iter().zip(&seqs) {
                for (b, v) in paths.iter().zip(&seqs) {
                    assert_eq!(leq(a, b).unwrap(), nt_leq(u, v));
                }
            }
        }
    }

    #[test]
    fn interval_counts() {
        assert_eq!(enumerate_intervals(&PathFamily::plain(), 2).unwrap().len(), 3);
        assert_eq!(enumerate_intervals(&PathFamily::plain(), 3).unwrap().len(), 13);
        assert_eq!(enumerate_intervals(&PathFamily::mdyck(2), 3).unwrap().len(), 62);
        assert!(enumerate_intervals(&PathFamily::mdyck(3), 6).is_err());
    }

    #[test]
    fn interval_stats_invariants() {
        for (f, nmax) in families_small() {
            for n in 1..=nmax.min(5) {
                for iv in enumerate_intervals(&f, n).unwrap() {
                    let s = iv.stats();
                    let c = iv.bottom().ascent_lengths();
                    assert!(s.r >= 1);
                    assert_eq!(c[..s.r].iter().sum::<usize>(), iv.top().first_ascent());
                    assert!(s.final_descent_bottom <= s.final_descent_top);
                }
            }
        }
    }

    #[test]
    fn interval_constructor_rejects_non_intervals() {
        assert!(matches!(Interval::new(p("UUDD"), p("UDUD")), Err(PosetError::NotAnInterval { .. })));
        let iv = Interval::new(p("UDUD"), p("UUDD")).unwrap();
        assert_eq!(
            *iv.stats(),
            IntervalStats { final_descent_bottom: 1, final_descent_top: 2, first_ascent_bottom: 1, r: 2 }
        );
    }
}
