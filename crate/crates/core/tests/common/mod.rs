//! Naive reference implementations used as test oracles. None of these go
//! through partner arrays or bit rows.

#![allow(dead_code)]

use gauss_lintel::{Chord, Lintel, SortedLintel};
use rand::seq::SliceRandom;
use rand::Rng;

/// Definition-level crossing test on raw endpoint pairs.
pub fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let (i, j) = (a.0.min(a.1), a.0.max(a.1));
    let (k, l) = (b.0.min(b.1), b.0.max(b.1));
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

pub fn naive_adjacency(l: &SortedLintel) -> Vec<Vec<bool>> {
    let c: Vec<(usize, usize)> = l.chords().iter().map(|c| (c.first, c.second)).collect();
    (0..c.len())
        .map(|u| (0..c.len()).map(|v| u != v && crosses(c[u], c[v])).collect())
        .collect()
}

/// The triangle condition written as a direct quantifier evaluation over
/// ordered triples `x, y, z` and all `w`.
pub fn naive_b3(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let e = |a: usize, b: usize| adj[a][b];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !(e(x, y) && e(x, z) && e(y, z)) {
                    continue;
                }
                let mut count = 0;
                for w in 0..n {
                    let first = e(x, w) && !e(y, w) && !e(z, w) && y != w && z != w;
                    let second = !e(x, w) && e(y, w) && e(z, w) && x != w;
                    if first || second {
                        count += 1;
                    }
                }
                if count % 2 == 1 {
                    return false;
                }
            }
        }
    }
    true
}

fn raw(l: &Lintel) -> Vec<(usize, usize)> {
    l.chords().iter().map(|c| (c.first, c.second)).collect()
}

fn naive_sort(pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    v.sort();
    v
}

/// Minimum over the 4n sorted candidates built by explicit arithmetic.
pub fn naive_canonical(l: &Lintel) -> Vec<(usize, usize)> {
    let pairs = raw(l);
    let m = 2 * pairs.len();
    let mut best: Option<Vec<(usize, usize)>> = None;
    for s in 0..m {
        for invert in [false, true] {
            let f = |e: usize| {
                let e = if invert { (m - e) % m } else { e };
                (e + s) % m
            };
            let cand = naive_sort(&pairs.iter().map(|&(a, b)| (f(a), f(b))).collect::<Vec<_>>());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

pub fn to_pairs(l: &SortedLintel) -> Vec<(usize, usize)> {
    l.chords().iter().map(|c| (c.first, c.second)).collect()
}

/// A uniformly random even-odd matching, with chords shuffled and
/// randomly oriented.
pub fn random_lintel<R: Rng>(rng: &mut R, n: usize) -> Lintel {
    let mut evens: Vec<usize> = (0..n).map(|i| 2 * i).collect();
    evens.shuffle(rng);
    let mut chords: Vec<Chord> = evens
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            let o = 2 * i + 1;
            if rng.gen() {
                Chord::new(o, e)
            } else {
                Chord::new(e, o)
            }
        })
        .collect();
    chords.shuffle(rng);
    Lintel::new(chords).unwrap()
}

/// A random composition of chord swaps, chord reorderings, shifts and
/// inversions.
pub fn scramble<R: Rng>(rng: &mut R, l: &Lintel) -> Lintel {
    let mut cur = l.clone();
    let m = cur.points();
    for _ in 0..rng.gen_range(1..6) {
        cur = match rng.gen_range(0..3) {
            0 => cur.shifted(rng.gen_range(0..m)),
            1 => cur.inverted(),
            _ => {
                let mut chords: Vec<Chord> = cur
                    .chords()
                    .iter()
                    .map(|c| if rng.gen() { Chord::new(c.second, c.first) } else { *c })
                    .collect();
                chords.shuffle(rng);
                Lintel::new(chords).unwrap()
            }
        };
    }
    cur
}

/// Brute-force graph isomorphism over all vertex permutations.
pub fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if (0..n).all(|i| (0..n).all(|j| a[i][j] == b[perm[i]][perm[j]])) {
            return true;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

pub const SIZE9_COUNTEREXAMPLE: &str =
    "[[0,5],[1,8],[2,9],[3,14],[4,15],[6,13],[7,12],[10,17],[11,16]]";

pub const SIZE10_COUNTEREXAMPLES: [&str; 6] = [
    "[[0,3],[1,10],[2,9],[4,15],[5,16],[6,19],[7,14],[8,13],[11,18],[12,17]]",
    "[[0,3],[1,8],[2,9],[4,15],[5,16],[6,13],[7,12],[10,17],[11,18],[14,19]]",
    "[[0,3],[1,10],[2,9],[4,17],[5,16],[6,11],[7,14],[8,15],[12,19],[13,18]].",
    "[[0,3],[1,8],[2,9],[4,17],[5,16],[6,13],[7,14],[10,15],[11,18],[12,19]].",
    "[[0,5],[1,10],[2,15],[3,16],[4,9],[6,13],[7,14],[8,19],[11,18],[12,17]].",
    "[[0,5],[1,16],[2,15],[3,10],[4,9],[6,19],[7,14],[8,13],[11,18],[12,17]].",
];
