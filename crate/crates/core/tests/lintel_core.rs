mod common;

use std::cmp::Ordering;
use std::collections::HashSet;

use gauss_lintel::permutation::factorial;
use gauss_lintel::{
    all_sorted_lintels, beta, canonical_lintel, cyclic_shift, from_gauss_word, invert,
    l_compare, sort_lintel, to_gauss_word, Chord, Lintel, Permutation, SortedLintel,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{naive_canonical, random_lintel, scramble, to_pairs};

fn lintel(pairs: &[(usize, usize)]) -> Lintel {
    Lintel::from_pairs(pairs).unwrap()
}

#[test]
fn canonical_examples_match_naive_enumeration() {
    let l = lintel(&[(0, 5), (1, 2), (3, 4)]);
    let expected = vec![(0, 1), (2, 3), (4, 5)];
    assert_eq!(naive_canonical(&l), expected);
    assert_eq!(to_pairs(&canonical_lintel(&l)), expected);

    let fixed = lintel(&[(0, 1), (2, 3), (4, 5)]);
    assert_eq!(naive_canonical(&fixed), expected);
    assert_eq!(to_pairs(&canonical_lintel(&fixed)), expected);
}

#[test]
fn canonical_matches_naive_on_random_lintels() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..2000 {
        let n = 1 + (rand::Rng::gen_range(&mut rng, 0..10));
        let l = random_lintel(&mut rng, n);
        assert_eq!(to_pairs(&canonical_lintel(&l)), naive_canonical(&l), "{l}");
    }
}

#[test]
fn beta_is_injective_up_to_seven() {
    for n in 1..=7 {
        let all: HashSet<SortedLintel> = all_sorted_lintels(n).collect();
        assert_eq!(all.len() as u64, factorial(n).unwrap(), "n = {n}");
    }
    let images: HashSet<SortedLintel> = (0..24)
        .map(|r| beta(&Permutation::unrank(4, r).unwrap()))
        .collect();
    assert_eq!(images.len(), 24);
}

#[test]
fn all_sorted_lintels_are_valid_sorted_lintels() {
    for l in all_sorted_lintels(5) {
        assert!(SortedLintel::new(l.chords().to_vec()).is_ok());
        assert_eq!(l.chords()[0].first, 0);
    }
}

#[test]
fn figure_word_roundtrip() {
    let w = "12334124".parse().unwrap();
    let l = from_gauss_word(&w).unwrap();
    assert_eq!(l.to_string(), "[[0,5],[1,6],[2,3],[4,7]]");
    assert_eq!(to_gauss_word(&Lintel::from(&l)).to_string(), "12334124");
}

#[test]
fn public_wrappers() {
    let l = lintel(&[(4, 7), (8, 1), (5, 0), (2, 9), (6, 3)]);
    assert_eq!(sort_lintel(&l).to_string(), "[[0,5],[1,8],[2,9],[3,6],[4,7]]");
    let t = lintel(&[(0, 1), (2, 3), (4, 5)]);
    assert_eq!(cyclic_shift(&t, 1).to_string(), "[[1,2],[3,4],[5,0]]");
    assert_eq!(invert(&lintel(&[(0, 3), (1, 4), (2, 5)])).to_string(), "[[0,3],[5,2],[4,1]]");
}

fn arb_lintel(max_n: usize) -> impl Strategy<Value = Lintel> {
    (1..=max_n).prop_flat_map(arb_lintel_of)
}

fn arb_lintel_of(n: usize) -> impl Strategy<Value = Lintel> {
    Just(n)
        .prop_flat_map(|n| {
            (
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(sigma, order, flips)| {
            let chords = order
                .iter()
                .map(|&i| {
                    let (a, b) = (2 * i + 1, 2 * sigma[i]);
                    if flips[i] {
                        Chord::new(b, a)
                    } else {
                        Chord::new(a, b)
                    }
                })
                .collect();
            Lintel::new(chords).unwrap()
        })
}

proptest! {
    #[test]
    fn operations_preserve_validity(l in arb_lintel(12), s in 0usize..24) {
        let m = l.points();
        let s = s % m;
        prop_assert!(Lintel::new(l.shifted(s).chords().to_vec()).is_ok());
        prop_assert!(Lintel::new(l.inverted().chords().to_vec()).is_ok());
        prop_assert!(SortedLintel::new(l.sorted().chords().to_vec()).is_ok());
        prop_assert!(SortedLintel::new(l.canonical().chords().to_vec()).is_ok());
    }

    #[test]
    fn sort_and_canonical_are_idempotent(l in arb_lintel(12)) {
        let s = l.sorted();
        prop_assert_eq!(Lintel::from(&s).sorted(), s.clone());
        let c = canonical_lintel(&l);
        prop_assert_eq!(canonical_lintel(&Lintel::from(&c)), c.clone());
        prop_assert!(c.is_canonical());
        prop_assert_ne!(l_compare(&c, &s).unwrap(), Ordering::Greater);
    }

    #[test]
    fn canonical_is_class_invariant(l in arb_lintel(11), seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let m = scramble(&mut rng, &l);
        prop_assert_eq!(canonical_lintel(&m), canonical_lintel(&l));
    }

    #[test]
    fn shift_and_invert_inverses(l in arb_lintel(10), s in 0usize..20) {
        let m = l.points();
        let s = s % m;
        prop_assert_eq!(l.shifted(s).shifted((m - s) % m), l.clone());
        prop_assert_eq!(l.inverted().inverted(), l);
    }

    #[test]
    fn word_roundtrip(l in arb_lintel(14)) {
        let w = to_gauss_word(&l);
        prop_assert_eq!(from_gauss_word(&w).unwrap(), l.sorted());
        let reparsed = w.to_string().parse().unwrap();
        prop_assert_eq!(from_gauss_word(&reparsed).unwrap(), l.sorted());
    }

    #[test]
    fn l_order_is_total(
        (a, b, c) in (1usize..=4).prop_flat_map(|n| (arb_lintel_of(n), arb_lintel_of(n), arb_lintel(6)))
    ) {
        let (a, b, c) = (a.sorted(), b.sorted(), c.sorted());
        let ab = l_compare(&a, &b).unwrap();
        prop_assert_eq!(ab.reverse(), l_compare(&b, &a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if b.size() == c.size() {
            let bc = l_compare(&b, &c).unwrap();
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(l_compare(&a, &c).unwrap(), Ordering::Greater);
            }
        } else {
            prop_assert!(l_compare(&b, &c).is_err());
        }
    }

    #[test]
    fn l_order_is_partner_array_order(
        (a, b) in (1usize..=7).prop_flat_map(|n| (arb_lintel_of(n), arb_lintel_of(n)))
    ) {
        let (a, b) = (a.sorted(), b.sorted());
        let flat = |l: &SortedLintel| to_pairs(l).into_iter().flat_map(|(x, y)| [x, y]).collect::<Vec<_>>();
        prop_assert_eq!(a.cmp(&b), flat(&a).cmp(&flat(&b)));
        prop_assert_eq!(a.cmp(&b), a.partner().cmp(&b.partner()));
    }

    #[test]
    fn listing_format_roundtrip(l in arb_lintel(12)) {
        let s = l.sorted();
        let text = s.to_string();
        prop_assert!(!text.contains(' ') && !text.ends_with('.'));
        prop_assert_eq!(text.parse::<SortedLintel>().unwrap(), s.clone());
        let spaced = format!(" {} .", text.replace(',', " , "));
        prop_assert_eq!(spaced.parse::<SortedLintel>().unwrap(), s);
    }
}
