use proptest::prelude::*;
use proptest::sample::Index;

use ascent_core::counting::{interval_to_walk, quadrant_count, quadrant_count_naive, walk_to_interval};
use ascent_core::involution::Involution;
use ascent_core::paths::{decode_sequence, encode_sequence, enumerate_paths, fuss_catalan, in_family};
use ascent_core::poset::{covers, enumerate_intervals, join, leq, lies_below, meet};
use ascent_core::sylvester::{avoids_patterns, interval_to_sylvester, phi, psi};
use ascent_core::{DyckPath, Interval, PathFamily, WalkKind, WalkSpec};

fn family() -> impl Strategy<Value = PathFamily> {
    prop_oneof![
        Just(PathFamily::plain()),
        (2usize..=3).prop_map(PathFamily::mdyck),
        (2usize..=3).prop_map(PathFamily::mirrored),
    ]
}

fn pick<T: Clone>(items: &[T], i: Index) -> T {
    items[i.index(items.len())].clone()
}

fn path_in(f: &PathFamily, n: usize, i: Index) -> DyckPath {
    pick(&enumerate_paths(f, n).unwrap(), i)
}

fn plain_interval(n: usize, i: Index) -> Interval {
    pick(&enumerate_intervals(&PathFamily::plain(), n).unwrap(), i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sequence_encoding_round_trips(f in family(), n in 1usize..=3, i in any::<Index>()) {
        let p = path_in(&f, n, i);
        prop_assert!(in_family(&p, &f));
        let u = encode_sequence(&p, &f).unwrap();
        prop_assert_eq!(decode_sequence(&u, &f).unwrap(), p);
    }

    #[test]
    fn order_is_antisymmetric_and_refines_geometry(n in 1usize..=5, i in any::<Index>(), j in any::<Index>()) {
        let f = PathFamily::plain();
        let (p, q) = (path_in(&f, n, i), path_in(&f, n, j));
        prop_assert!(leq(&p, &p).unwrap());
        let (pq, qp) = (leq(&p, &q).unwrap(), leq(&q, &p).unwrap());
        prop_assert_eq!(pq && qp, p == q);
        if pq {
            prop_assert!(lies_below(&p, &q).unwrap());
        }
    }

    #[test]
    fn covers_go_up(n in 1usize..=6, i in any::<Index>()) {
        let p = path_in(&PathFamily::plain(), n, i);
        for c in covers(&p) {
            prop_assert!(c != p && leq(&p, &c).unwrap() && !leq(&c, &p).unwrap());
        }
    }

    #[test]
    fn join_and_meet_bound(m in 1usize..=2, n in 1usize..=4, i in any::<Index>(), j in any::<Index>()) {
        let f = if m == 1 { PathFamily::plain() } else { PathFamily::mdyck(2) };
        let n = if m == 1 { n } else { n.min(3) };
        let (p, q) = (path_in(&f, n, i), path_in(&f, n, j));
        let up = join(&p, &q, &f).unwrap();
        let down = meet(&p, &q, &f).unwrap();
        prop_assert_eq!(&up, &join(&q, &p, &f).unwrap());
        prop_assert!(in_family(&up, &f) && in_family(&down, &f));
        for x in [&p, &q] {
            prop_assert!(leq(x, &up).unwrap() && leq(&down, x).unwrap());
        }
    }

    #[test]
    fn mirrored_joins_are_upper_bounds(n in 1usize..=3, i in any::<Index>(), j in any::<Index>()) {
        let f = PathFamily::mirrored(2);
        let (p, q) = (path_in(&f, n, i), path_in(&f, n, j));
        let up = join(&p, &q, &f).unwrap();
        prop_assert!(in_family(&up, &f) && leq(&p, &up).unwrap() && leq(&q, &up).unwrap());
    }

    #[test]
    fn intervals_are_confined_walks(n in 1usize..=5, i in any::<Index>()) {
        let f = PathFamily::plain();
        let iv = plain_interval(n, i);
        let w = interval_to_walk(&iv, &f).unwrap();
        prop_assert_eq!(w.len(), n - 1);
        prop_assert!(w.is_confined());
        prop_assert_eq!(walk_to_interval(&w, &f).unwrap(), iv);
    }

    #[test]
    fn sylvester_words_are_canonical(n in 1usize..=5, i in any::<Index>()) {
        let f = PathFamily::plain();
        let iv = plain_interval(n, i);
        let w = interval_to_sylvester(&iv, &f).unwrap();
        prop_assert!(avoids_patterns(&w));
        let (u, v) = phi(&w, n).unwrap();
        prop_assert_eq!(&decode_sequence(&u, &f).unwrap(), iv.bottom());
        prop_assert_eq!(&decode_sequence(&v, &f).unwrap(), iv.top());
        prop_assert_eq!(psi(&u, &v, n).unwrap(), w);
    }

    #[test]
    fn involution_swaps_statistics(n in 1usize..=5, i in any::<Index>()) {
        let inv = Involution::new();
        let iv = plain_interval(n, i);
        let image = inv.apply(&iv).unwrap();
        let (s, t) = (iv.stats(), image.stats());
        prop_assert_eq!((t.first_ascent_bottom, t.r), (s.r, s.first_ascent_bottom));
        prop_assert_eq!(inv.apply(&image).unwrap(), iv);
    }

    #[test]
    fn transfer_matches_naive_walks(prime in any::<bool>(), m in 1usize..=2, steps in 0usize..=5) {
        let kind = if prime { WalkKind::InfiniteSPrime } else { WalkKind::InfiniteS };
        let spec = WalkSpec::new(kind, m);
        prop_assert_eq!(quadrant_count(&spec, steps), quadrant_count_naive(&spec, steps));
    }
}

fn fuss_to_usize(m: usize, n: usize) -> usize {
    fuss_catalan(m, n).try_into().unwrap()
}

#[test]
fn path_counts_are_fuss_catalan() {
    for m in 1..=3 {
        for n in 1..=4 {
            let f = if m == 1 { PathFamily::plain() } else { PathFamily::mdyck(m) };
            assert_eq!(enumerate_paths(&f, n).unwrap().len(), fuss_to_usize(m, n), "m={m} n={n}");
            // mirroring reverses a path, so both families have the same size
            assert_eq!(enumerate_paths(&PathFamily::mirrored(m), n).unwrap().len(), fuss_to_usize(m, n));
        }
    }
}
