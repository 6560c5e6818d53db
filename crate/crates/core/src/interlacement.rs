//! Interlacement graphs and GF(2) matrices with bit-packed rows.
//!
//! Every matrix here has at most 64 columns, so a row is a single `u64`
//! and products, common-neighbour counts and degree parities reduce to
//! word operations.

use std::fmt;

use crate::error::{Error, Result};
use crate::lintel::{SortedLintel, MAX_CHORDS};

#[inline]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Square matrix over GF(2); row `i` bit `j` holds entry `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n: usize,
    rows: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_CHORDS);
        Gf2Matrix {
            n,
            rows: vec![0; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_CHORDS);
        Gf2Matrix {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    /// Rows given as bit masks; bits at or above `n` must be clear.
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n > MAX_CHORDS || rows.len() != n {
            return Err(Error::SizeMismatch {
                left: n,
                right: rows.len(),
            });
        }
        if rows.iter().any(|r| r & !full_mask(n) != 0) {
            return Err(Error::InvalidLintel(format!(
                "row has bits outside the {n} columns"
            )));
        }
        Ok(Gf2Matrix { n, rows })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        assert!(n <= MAX_CHORDS);
        let rows = (0..n)
            .map(|i| (0..n).filter(|&j| f(i, j)).fold(0u64, |r, j| r | 1 << j))
            .collect();
        Gf2Matrix { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    fn check_dims(&self, other: &Gf2Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `M + Λ`.
    pub fn with_diagonal(&self, mask: &DiagonalMask) -> Result<Self> {
        if mask.len != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: mask.len,
            });
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r ^ (mask.bits >> i & 1) << i)
            .collect();
        Ok(Gf2Matrix { n: self.n, rows })
    }
}

/// Entrywise XOR.
pub fn gf2_add(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    a.check_dims(b)?;
    Ok(Gf2Matrix {
        n: a.n,
        rows: a.rows.iter().zip(&b.rows).map(|(x, y)| x ^ y).collect(),
    })
}

#[inline]
fn product_row(a_row: u64, b_rows: &[u64]) -> u64 {
    let mut acc = 0u64;
    let mut bits = a_row;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        acc ^= b_rows[k];
        bits &= bits - 1;
    }
    acc
}

/// Row `i` of `AB` is the XOR of the rows of `B` selected by row `i` of `A`.
pub fn gf2_mul(a: &Gf2Matrix, b: &Gf2Matrix) -> Result<Gf2Matrix> {
    a.check_dims(b)?;
    Ok(Gf2Matrix {
        n: a.n,
        rows: a.rows.iter().map(|&r| product_row(r, &b.rows)).collect(),
    })
}

/// `A² = A` over GF(2).
pub fn gf2_is_idempotent(a: &Gf2Matrix) -> bool {
    rows_idempotent(&a.rows)
}

#[inline]
pub(crate) fn rows_idempotent(rows: &[u64]) -> bool {
    rows.iter().all(|&r| product_row(r, rows) == r)
}

/// Diagonal matrix over GF(2), bit `i` is entry `(i, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalMask {
    pub bits: u64,
    pub len: usize,
}

/// A subset of vertices as a bit set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    pub bits: u64,
    pub len: usize,
}

impl VertexSubset {
    pub fn contains(&self, v: usize) -> bool {
        self.bits >> v & 1 == 1
    }
}

/// Graph on the chords of a lintel; chords are adjacent iff they cross.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InterlacementGraph {
    adjacency: Gf2Matrix,
}

impl InterlacementGraph {
    /// Accepts an adjacency matrix that is symmetric with zero diagonal.
    pub fn from_adjacency(adjacency: Gf2Matrix) -> Result<Self> {
        let n = adjacency.dim();
        for i in 0..n {
            if adjacency.get(i, i) {
                return Err(Error::InvalidLintel(format!("self-loop at vertex {i}")));
            }
            for j in 0..i {
                if adjacency.get(i, j) != adjacency.get(j, i) {
                    return Err(Error::InvalidLintel(format!(
                        "asymmetric entry ({i}, {j})"
                    )));
                }
            }
        }
        Ok(InterlacementGraph { adjacency })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_CHORDS {
            return Err(Error::SizeTooLarge {
                size: n,
                max: MAX_CHORDS,
            });
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, size: n });
                }
            }
            if u == v {
                return Err(Error::InvalidLintel(format!("self-loop at vertex {u}")));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(InterlacementGraph {
            adjacency: Gf2Matrix { n, rows },
        })
    }

    pub fn edgeless(n: usize) -> Self {
        InterlacementGraph {
            adjacency: Gf2Matrix::zero(n),
        }
    }

    pub fn complete(n: usize) -> Self {
        InterlacementGraph {
            adjacency: Gf2Matrix::from_fn(n, |i, j| i != j),
        }
    }

    pub fn size(&self) -> usize {
        self.adjacency.n
    }

    pub fn adjacency(&self) -> &Gf2Matrix {
        &self.adjacency
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adjacency.rows[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.size())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size()).flat_map(move |u| {
            (u + 1..self.size())
                .filter(move |&v| self.adjacent(u, v))
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.size() {
            return Err(Error::OutOfRange {
                vertex: v,
                size: self.size(),
            });
        }
        Ok(())
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbours(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok((self.row(u) & self.row(v)).count_ones() as usize)
    }

    /// Connectivity; a single vertex counts as connected.
    pub fn is_prime(&self) -> bool {
        let n = self.size();
        if n <= 1 {
            return true;
        }
        let all = self.vertex_mask();
        let mut reached = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.row(v) & !reached;
            reached |= fresh;
            frontier |= fresh;
        }
        reached == all
    }

    /// `I/v`: delete `v` and toggle every edge between two neighbours of `v`.
    /// Surviving vertices keep their relative order.
    pub fn reduce(&self, v: usize) -> Result<InterlacementGraph> {
        self.check_vertex(v)?;
        let n = self.size();
        if n < 2 {
            return Err(Error::SizeTooSmall(n));
        }
        let nbrs = self.row(v);
        let low = (1u64 << v) - 1;
        let squeeze = |r: u64| (r & low) | ((r >> 1) & !low);
        let rows = (0..n)
            .filter(|&u| u != v)
            .map(|u| {
                let mut r = self.row(u);
                if nbrs >> u & 1 == 1 {
                    // u itself is in nbrs but never adjacent to itself; clear it
                    r ^= nbrs & !(1u64 << u);
                }
                squeeze(r)
            })
            .collect();
        Ok(InterlacementGraph {
            adjacency: Gf2Matrix { n: n - 1, rows },
        })
    }

    /// Plain Graphviz output: vertices then undirected edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.size() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for InterlacementGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for u in 0..self.size() {
            for v in 0..self.size() {
                f.write_str(if self.adjacent(u, v) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Chords `(i, j)` and `(k, l)` cross iff exactly one of `k, l` lies strictly
/// between `i` and `j`.
pub fn interlacement_graph(l: &SortedLintel) -> InterlacementGraph {
    let chords = l.chords();
    let n = chords.len();
    let mut rows = vec![0u64; n];
    // a sweep over positions: chords open on their first endpoint, and
    // closing chord c crosses every chord opened after c and still open
    let owner = l.chord_of_position();
    let mut open = 0u64;
    for (pos, &c) in owner.iter().enumerate() {
        if chords[c].first == pos {
            open |= 1 << c;
        } else {
            open &= !(1u64 << c);
            // chords are indexed by first endpoint, so bits above c opened later
            let crossing = open & !full_mask(c + 1);
            rows[c] |= crossing;
            let mut bits = crossing;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                rows[k] |= 1 << c;
                bits &= bits - 1;
            }
        }
    }
    InterlacementGraph {
        adjacency: Gf2Matrix { n, rows },
    }
}
