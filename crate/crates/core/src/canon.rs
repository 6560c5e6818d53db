//! Canonization over partner arrays.
//!
//! A sorted lintel on `m = 2n` points is fully described by its partner array
//! `p`, where `p[x]` is the other endpoint of the chord through `x`. The
//! L-order on sorted lintels coincides with lexicographic order on partner
//! arrays, so every transform of the dihedral group acting on the circle can
//! be compared lazily, position by position, without materializing it.

use std::cmp::Ordering;

/// One element of the dihedral action: `x -> x + shift` or `x -> shift - x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transform {
    pub shift: usize,
    pub reflect: bool,
}

impl Transform {
    #[inline]
    fn apply(self, x: usize, m: usize) -> usize {
        if self.reflect {
            (self.shift + m - x) % m
        } else {
            (x + self.shift) % m
        }
    }

    #[inline]
    fn inverse_apply(self, y: usize, m: usize) -> usize {
        if self.reflect {
            // reflections are involutions
            (self.shift + m - y) % m
        } else {
            (y + m - self.shift) % m
        }
    }

    /// All `2m` transforms, identity first.
    pub fn all(m: usize) -> impl Iterator<Item = Transform> {
        (0..m)
            .map(|shift| Transform {
                shift,
                reflect: false,
            })
            .chain((0..m).map(|shift| Transform {
                shift,
                reflect: true,
            }))
    }

    /// Partner value at position `y` of the transformed matching.
    #[inline]
    pub fn image_at(self, partner: &[u8], y: usize) -> u8 {
        let m = partner.len();
        let x = self.inverse_apply(y, m);
        self.apply(partner[x] as usize, m) as u8
    }
}

/// Lexicographic comparison of `t(a)` against `b`.
#[inline]
fn compare_transformed(a: &[u8], t: Transform, b: &[u8]) -> Ordering {
    for (y, &by) in b.iter().enumerate() {
        match t.image_at(a, y).cmp(&by) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Whether `partner` is the L-minimum among all its transforms.
pub fn is_lyndon(partner: &[u8]) -> bool {
    Transform::all(partner.len())
        .skip(1)
        .all(|t| compare_transformed(partner, t, partner) != Ordering::Less)
}

/// Writes the L-minimum transform of `partner` into `out`.
pub fn canonical_partner(partner: &[u8], out: &mut [u8]) {
    let m = partner.len();
    debug_assert_eq!(out.len(), m);
    out.copy_from_slice(partner);
    for t in Transform::all(m).skip(1) {
        if compare_transformed(partner, t, out) == Ordering::Less {
            for (y, slot) in out.iter_mut().enumerate() {
                *slot = t.image_at(partner, y);
            }
        }
    }
}
