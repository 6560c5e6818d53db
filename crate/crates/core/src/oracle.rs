//! Ground-truth realizability by exhaustive spherical embedding search.
//!
//! The diagram graph of a lintel has one 4-valent vertex per chord (a
//! crossing) and one arc per step `t -> t+1` around the circle. A curve
//! realizes the diagram exactly when this graph embeds in the sphere with
//! every crossing transversal, i.e. the two half-edges of each pass sit
//! opposite each other in the rotation. That leaves two rotations per
//! crossing (mirror images), so there are `2^n` rotation systems; a global
//! mirror maps one half onto the other, so crossing 0 is pinned.
//!
//! Half-edges are numbered `2t` (tail of arc `t`) and `2t + 1` (head of arc
//! `t`), so the arc involution is `h ^ 1`. Faces are orbits of
//! `h -> rotation_successor(h ^ 1)`; the embedding is spherical iff
//! `V - E + F = 2`.

use crate::lintel::SortedLintel;

/// One bit per crossing choosing between the two transversal rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RotationChoice {
    pub bits: u64,
    pub len: usize,
}

/// The two passes through one crossing, as half-edge ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Lower position of the chord.
    pub p: usize,
    /// Higher position of the chord.
    pub q: usize,
    pub in_p: usize,
    pub out_p: usize,
    pub in_q: usize,
    pub out_q: usize,
}

impl Crossing {
    /// Cyclic order of the four half-edges for one rotation bit.
    pub fn rotation(&self, flipped: bool) -> [usize; 4] {
        if flipped {
            [self.in_p, self.out_q, self.out_p, self.in_q]
        } else {
            [self.in_p, self.in_q, self.out_p, self.out_q]
        }
    }
}

/// `⟨V, E, H⟩` with per-crossing half-edge structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramGraph {
    crossings: Vec<Crossing>,
    crossing_of: Vec<usize>,
}

impl DiagramGraph {
    pub fn new(l: &SortedLintel) -> Self {
        let m = l.points();
        let in_half = |pos: usize| 2 * ((pos + m - 1) % m) + 1;
        let crossings = l
            .chords()
            .iter()
            .map(|c| Crossing {
                p: c.first,
                q: c.second,
                in_p: in_half(c.first),
                out_p: 2 * c.first,
                in_q: in_half(c.second),
                out_q: 2 * c.second,
            })
            .collect();
        DiagramGraph {
            crossings,
            crossing_of: l.chord_of_position(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.crossing_of.len()
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.arc_count()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Crossing owning each circle position.
    pub fn crossing_of(&self) -> &[usize] {
        &self.crossing_of
    }

    /// Endpoints `(from, to)` of arc `t`, as crossing indices.
    pub fn arc(&self, t: usize) -> (usize, usize) {
        let m = self.arc_count();
        (self.crossing_of[t], self.crossing_of[(t + 1) % m])
    }

    /// Crossing incident to a half-edge.
    pub fn vertex_of(&self, h: usize) -> usize {
        let t = h / 2;
        let pos = if h.is_multiple_of(2) { t } else { (t + 1) % self.arc_count() };
        self.crossing_of[pos]
    }

    fn fill_rotation(&self, choice: u64, succ: &mut [usize]) {
        for (c, x) in self.crossings.iter().enumerate() {
            let r = x.rotation(choice >> c & 1 == 1);
            for k in 0..4 {
                succ[r[k]] = r[(k + 1) % 4];
            }
        }
    }

    /// Lengths of all face orbits under `choice`.
    pub fn trace_faces(&self, choice: RotationChoice) -> Vec<usize> {
        let mut succ = vec![0; self.half_edge_count()];
        self.fill_rotation(choice.bits, &mut succ);
        let mut seen = vec![false; succ.len()];
        let mut faces = Vec::new();
        for start in 0..succ.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                len += 1;
                h = succ[h ^ 1];
            }
            faces.push(len);
        }
        faces
    }

    /// `V - E + F` for a rotation choice.
    pub fn euler_characteristic(&self, choice: RotationChoice) -> i64 {
        let v = self.crossing_count() as i64;
        let e = self.arc_count() as i64;
        v - e + self.trace_faces(choice).len() as i64
    }

    fn face_count(&self, choice: u64, succ: &mut [usize], seen: &mut [u64]) -> usize {
        self.fill_rotation(choice, succ);
        seen.iter_mut().for_each(|w| *w = 0);
        let mut faces = 0;
        for start in 0..succ.len() {
            if seen[start / 64] >> (start % 64) & 1 == 1 {
                continue;
            }
            faces += 1;
            let mut h = start;
            while seen[h / 64] >> (h % 64) & 1 == 0 {
                seen[h / 64] |= 1 << (h % 64);
                h = succ[h ^ 1];
            }
        }
        faces
    }

    /// First rotation choice (in increasing bit order, crossing 0 pinned)
    /// giving a spherical embedding.
    pub fn spherical_embedding(&self) -> Option<RotationChoice> {
        let n = self.crossing_count();
        let v = n as i64;
        let e = self.arc_count() as i64;
        let mut succ = vec![0; self.half_edge_count()];
        let mut seen = vec![0u64; self.half_edge_count().div_ceil(64)];
        let choices = 1u64 << (n - 1);
        for k in 0..choices {
            let bits = k << 1;
            let f = self.face_count(bits, &mut succ, &mut seen) as i64;
            let chi = v - e + f;
            assert!(
                f >= 1 && chi <= 2 && chi % 2 == 0,
                "impossible face count {f} for {n} crossings"
            );
            if chi == 2 {
                return Some(RotationChoice { bits, len: n });
            }
        }
        None
    }
}

pub fn diagram_graph(l: &SortedLintel) -> DiagramGraph {
    DiagramGraph::new(l)
}

/// Whether some closed plane curve has this Gauss diagram.
pub fn is_realizable(l: &SortedLintel) -> bool {
    DiagramGraph::new(l).spherical_embedding().is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(pairs: &[(usize, usize)]) -> SortedLintel {
        SortedLintel::from_pairs(pairs).unwrap()
    }

    #[test]
    fn graph_shape() {
        let one = diagram_graph(&sl(&[(0, 1)]));
        assert_eq!(one.crossing_count(), 1);
        assert_eq!(one.arc_count(), 2);
        assert_eq!(one.arc(0), (0, 0));
        assert_eq!(one.arc(1), (0, 0));

        let t = diagram_graph(&sl(&[(0, 3), (1, 4), (2, 5)]));
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.arc_count(), 6);
        assert_eq!(t.half_edge_count(), 12);
        let arcs: Vec<_> = (0..6).map(|a| t.arc(a)).collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (2, 0), (0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn each_crossing_has_four_distinct_ends() {
        let g = diagram_graph(&sl(&[(0, 5), (1, 6), (2, 3), (4, 7)]));
        let mut all: Vec<usize> = Vec::new();
        for (c, x) in g.crossings().iter().enumerate() {
            for h in x.rotation(false) {
                assert_eq!(g.vertex_of(h), c);
                all.push(h);
            }
        }
        all.sort_unstable();
        assert_eq!(all, (0..16).collect::<Vec<_>>());
    }

    #[test]
    fn small_realizable_curves() {
        assert!(is_realizable(&sl(&[(0, 1)])));
        assert!(is_realizable(&sl(&[(0, 3), (1, 4), (2, 5)])));
        assert!(is_realizable(&sl(&[(0, 5), (1, 6), (2, 3), (4, 7)])));
    }

    #[test]
    fn single_chord_has_three_faces() {
        let g = diagram_graph(&sl(&[(0, 1)]));
        for bits in 0..2 {
            let faces = g.trace_faces(RotationChoice { bits, len: 1 });
            assert_eq!(faces.len(), 3);
            assert_eq!(faces.iter().sum::<usize>(), 4);
        }
    }
}
