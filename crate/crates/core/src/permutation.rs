//! Permutations and the bijection onto sorted lintels.
//!
//! `beta` sends `σ ∈ S_n` to the matching `{2i+1, 2σ(i)}` (0-based), which
//! pairs every odd position with an even one. Every sorted lintel arises
//! exactly once, so walking `S_n` in lexicographic order walks all sorted
//! lintels of size `n`.

use crate::error::{Error, Result};
use crate::lintel::{SortedLintel, MAX_CHORDS};

/// A permutation of `{1, .., n}`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// `images[i - 1] = σ(i)` with 1-based values.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_CHORDS {
            return Err(Error::InvalidPermutation(format!("unsupported length {n}")));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_CHORDS).contains(&n));
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// The permutation at lexicographic `rank` in `S_n`, if `rank < n!`.
    pub fn unrank(n: usize, rank: u64) -> Option<Self> {
        let mut images = vec![0u8; n];
        unrank_into(n, rank, &mut images)?;
        Some(Permutation { images })
    }
}

/// `n!`, or `None` on overflow.
pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// Writes the permutation of rank `rank` (0-based images) into `out[..n]`.
pub(crate) fn unrank_into(n: usize, mut rank: u64, out: &mut [u8]) -> Option<()> {
    if rank >= factorial(n)? {
        return None;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    for (i, slot) in out.iter_mut().take(n).enumerate() {
        let block = factorial(n - 1 - i)?;
        let idx = (rank / block) as usize;
        rank %= block;
        *slot = pool.remove(idx);
    }
    Some(())
}

/// Advances to the lexicographically next permutation; false at the last one.
pub(crate) fn next_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Fills `partner[..2n]` with the matching `beta(images)`.
#[inline]
pub(crate) fn beta_partner(images: &[u8], partner: &mut [u8]) {
    for (i, &s) in images.iter().enumerate() {
        let odd = 2 * i as u8 + 1;
        let even = 2 * s;
        partner[odd as usize] = even;
        partner[even as usize] = odd;
    }
}

/// The sorted lintel `{{2i-1, 2σ(i)-2} : i ∈ 1..n}`.
pub fn beta(p: &Permutation) -> SortedLintel {
    let mut partner = vec![0u8; 2 * p.len()];
    beta_partner(&p.images, &mut partner);
    SortedLintel::from_partner(&partner)
}

/// Iterator over `beta(σ)` for `σ` in a range of lexicographic ranks.
#[derive(Clone, Debug)]
pub struct SortedLintels {
    images: Vec<u8>,
    remaining: u64,
}

impl SortedLintels {
    /// Ranks `start..end` (clamped to `n!`).
    pub fn range(n: usize, start: u64, end: u64) -> Self {
        assert!((1..=MAX_CHORDS).contains(&n), "size {n} out of range");
        let total = factorial(n).unwrap_or(u64::MAX);
        let end = end.min(total);
        let mut images = vec![0u8; n];
        let remaining = if start < end {
            unrank_into(n, start, &mut images).expect("start < n!");
            end - start
        } else {
            0
        };
        SortedLintels { images, remaining }
    }

    /// Advances the walker, exposing the current partner array.
    pub(crate) fn next_partner(&mut self, partner: &mut [u8]) -> bool {
        if self.remaining == 0 {
            return false;
        }
        beta_partner(&self.images, partner);
        self.remaining -= 1;
        if self.remaining > 0 {
            next_permutation(&mut self.images);
        }
        true
    }
}

impl Iterator for SortedLintels {
    type Item = SortedLintel;

    fn next(&mut self) -> Option<SortedLintel> {
        let mut partner = vec![0u8; 2 * self.images.len()];
        self.next_partner(&mut partner)
            .then(|| SortedLintel::from_partner(&partner))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// All `n!` sorted lintels of size `n`, in lexicographic permutation order.
pub fn all_sorted_lintels(n: usize) -> SortedLintels {
    SortedLintels::range(n, 0, u64::MAX)
}
