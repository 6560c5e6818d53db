//! Realizability conditions on interlacement graphs.
//!
//! C1 and C2 are parity conditions on degrees and common neighbours. B adds
//! the triangle condition B3; GL adds C2 on every vertex reduction. STZ and R
//! search for a certificate (a diagonal mask, a vertex subset) and are
//! exponential in the number of chords. CA is the embedding oracle in
//! [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::interlacement::{
    interlacement_graph, rows_idempotent, DiagonalMask, InterlacementGraph, VertexSubset,
};
use crate::lintel::{SortedLintel, MAX_CHORDS};
use crate::oracle;

/// Every vertex has even degree.
pub fn check_c1(g: &InterlacementGraph) -> bool {
    (0..g.size()).all(|v| g.row(v).count_ones().is_multiple_of(2))
}

/// Every non-adjacent pair has an even number of common neighbours.
pub fn check_c2(g: &InterlacementGraph) -> bool {
    let n = g.size();
    (0..n).all(|u| {
        let ru = g.row(u);
        (u + 1..n)
            .filter(|&v| ru >> v & 1 == 0)
            .all(|v| (ru & g.row(v)).count_ones().is_multiple_of(2))
    })
}

/// Vertices with index greater than `v`.
#[inline]
fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// For each triangle and each choice of distinguished vertex `x` (the other
/// two being `y`, `z`): the number of `w` adjacent to `x` but to neither `y`
/// nor `z`, plus the number of `w` adjacent to `y` and `z` but not to `x`,
/// is even.
pub fn check_b3(g: &InterlacementGraph) -> bool {
    let n = g.size();
    let all = g.vertex_mask();
    for a in 0..n {
        let ra = g.row(a);
        let mut bs = ra & above(a);
        while bs != 0 {
            let b = bs.trailing_zeros() as usize;
            bs &= bs - 1;
            let rb = g.row(b);
            let mut cs = ra & rb & above(b);
            while cs != 0 {
                let c = cs.trailing_zeros() as usize;
                cs &= cs - 1;
                for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
                    let (rx, ry, rz) = (g.row(x), g.row(y), g.row(z));
                    let only_x = rx & !ry & !rz & !(1u64 << y) & !(1u64 << z);
                    let yz_not_x = !rx & ry & rz & !(1u64 << x) & all;
                    if (only_x.count_ones() + yz_not_x.count_ones()) % 2 == 1 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// C1 ∧ C2 ∧ B3.
pub fn check_b(g: &InterlacementGraph) -> bool {
    check_c1(g) && check_c2(g) && check_b3(g)
}

/// C2 on the graph and on every single-vertex reduction. C1 is not part of
/// this condition.
pub fn check_gl(g: &InterlacementGraph) -> bool {
    if !check_c2(g) {
        return false;
    }
    if g.size() < 2 {
        return true;
    }
    (0..g.size()).all(|v| check_c2(&g.reduce(v).expect("vertex in range")))
}

fn assert_searchable(g: &InterlacementGraph) {
    assert!(
        g.size() < MAX_CHORDS,
        "certificate search needs fewer than {MAX_CHORDS} vertices"
    );
}

/// C1 and a diagonal `Λ` with `M + Λ` idempotent over GF(2). Returns the
/// first mask found in increasing numeric order.
pub fn check_stz(g: &InterlacementGraph) -> (bool, Option<DiagonalMask>) {
    assert_searchable(g);
    if !check_c1(g) {
        return (false, None);
    }
    let n = g.size();
    let mut rows = g.adjacency().rows().to_vec();
    for bits in 0..1u64 << n {
        for (i, r) in rows.iter_mut().enumerate() {
            *r = g.row(i) ^ (bits >> i & 1) << i;
        }
        if rows_idempotent(&rows) {
            return (true, Some(DiagonalMask { bits, len: n }));
        }
    }
    (false, None)
}

/// Bit `v` of entry `u`: `u != v` and `u, v` have an odd number of common
/// neighbours.
fn odd_common_neighbours(g: &InterlacementGraph) -> Vec<u64> {
    let n = g.size();
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && (g.row(u) & g.row(v)).count_ones() % 2 == 1)
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect()
}

/// Whether `subset` satisfies: for all distinct `u, v`, odd common
/// neighbours iff adjacent and on the same side of the subset.
pub fn r_certificate_holds(g: &InterlacementGraph, subset: VertexSubset) -> bool {
    r_holds(g, &odd_common_neighbours(g), subset.bits)
}

fn r_holds(g: &InterlacementGraph, odd: &[u64], a: u64) -> bool {
    let all = g.vertex_mask();
    (0..g.size()).all(|u| {
        let same = if a >> u & 1 == 1 { a } else { !a & all };
        odd[u] == g.row(u) & same & !(1u64 << u)
    })
}

/// C1 and a vertex subset `A` as in [`r_certificate_holds`]. Returns the
/// first subset found in increasing numeric order.
pub fn check_r(g: &InterlacementGraph) -> (bool, Option<VertexSubset>) {
    assert_searchable(g);
    if !check_c1(g) {
        return (false, None);
    }
    let n = g.size();
    let odd = odd_common_neighbours(g);
    (0..1u64 << n)
        .find(|&a| r_holds(g, &odd, a))
        .map_or((false, None), |bits| {
            (true, Some(VertexSubset { bits, len: n }))
        })
}

/// A single criterion selectable in filters and discrepancy searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    C2,
    B3,
    B,
    Gl,
    Stz,
    R,
    Ca,
}

impl Criterion {
    /// In hot-loop evaluation order, cheapest first.
    pub const ALL: [Criterion; 7] = [
        Criterion::C2,
        Criterion::B3,
        Criterion::B,
        Criterion::Gl,
        Criterion::Stz,
        Criterion::R,
        Criterion::Ca,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Criterion::C2 => "C2",
            Criterion::B3 => "B3",
            Criterion::B => "B",
            Criterion::Gl => "GL",
            Criterion::Stz => "STZ",
            Criterion::R => "R",
            Criterion::Ca => "CA",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownCriterion(s.to_string()))
    }
}

/// Lazily evaluated, memoized criteria for one lintel.
pub struct Evaluation<'a> {
    lintel: &'a SortedLintel,
    graph: InterlacementGraph,
    prime: Option<bool>,
    c1: Option<bool>,
    c2: Option<bool>,
    b3: Option<bool>,
    gl: Option<bool>,
    stz: Option<(bool, Option<DiagonalMask>)>,
    r: Option<(bool, Option<VertexSubset>)>,
    ca: Option<bool>,
}

macro_rules! memo {
    ($self:ident . $field:ident, $e:expr) => {{
        if $self.$field.is_none() {
            $self.$field = Some($e);
        }
        $self.$field.unwrap()
    }};
}

impl<'a> Evaluation<'a> {
    pub fn new(lintel: &'a SortedLintel) -> Self {
        Evaluation {
            graph: interlacement_graph(lintel),
            lintel,
            prime: None,
            c1: None,
            c2: None,
            b3: None,
            gl: None,
            stz: None,
            r: None,
            ca: None,
        }
    }

    pub fn graph(&self) -> &InterlacementGraph {
        &self.graph
    }

    pub fn prime(&mut self) -> bool {
        memo!(self.prime, self.graph.is_prime())
    }

    pub fn c1(&mut self) -> bool {
        memo!(self.c1, check_c1(&self.graph))
    }

    pub fn c2(&mut self) -> bool {
        memo!(self.c2, check_c2(&self.graph))
    }

    pub fn b3(&mut self) -> bool {
        memo!(self.b3, check_b3(&self.graph))
    }

    pub fn b(&mut self) -> bool {
        self.c1() && self.c2() && self.b3()
    }

    pub fn gl(&mut self) -> bool {
        if self.gl.is_none() {
            // GL begins with C2; reuse it when already known to fail
            let v = self.c2() && check_gl(&self.graph);
            self.gl = Some(v);
        }
        self.gl.unwrap()
    }

    pub fn stz(&mut self) -> bool {
        memo!(self.stz, check_stz(&self.graph)).0
    }

    pub fn r(&mut self) -> bool {
        memo!(self.r, check_r(&self.graph)).0
    }

    pub fn ca(&mut self) -> bool {
        memo!(self.ca, oracle::is_realizable(self.lintel))
    }

    pub fn get(&mut self, c: Criterion) -> bool {
        match c {
            Criterion::C2 => self.c2(),
            Criterion::B3 => self.b3(),
            Criterion::B => self.b(),
            Criterion::Gl => self.gl(),
            Criterion::Stz => self.stz(),
            Criterion::R => self.r(),
            Criterion::Ca => self.ca(),
        }
    }

    pub fn report(mut self) -> CriteriaReport {
        let prime = self.prime();
        let (c1, c2, b3, gl) = (self.c1(), self.c2(), self.b3(), self.gl());
        let (stz, r, realizable) = (self.stz(), self.r(), self.ca());
        CriteriaReport {
            lintel: self.lintel.clone(),
            prime,
            c1,
            c2,
            b3,
            b: c1 && c2 && b3,
            gl,
            stz,
            r,
            realizable,
            stz_certificate: self.stz.and_then(|s| s.1),
            r_certificate: self.r.and_then(|s| s.1),
        }
    }
}

/// Every criterion evaluated on one lintel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriteriaReport {
    pub lintel: SortedLintel,
    pub prime: bool,
    pub c1: bool,
    pub c2: bool,
    pub b3: bool,
    pub b: bool,
    pub gl: bool,
    pub stz: bool,
    pub r: bool,
    pub realizable: bool,
    pub stz_certificate: Option<DiagonalMask>,
    pub r_certificate: Option<VertexSubset>,
}

impl CriteriaReport {
    pub fn get(&self, c: Criterion) -> bool {
        match c {
            Criterion::C2 => self.c2,
            Criterion::B3 => self.b3,
            Criterion::B => self.b,
            Criterion::Gl => self.gl,
            Criterion::Stz => self.stz,
            Criterion::R => self.r,
            Criterion::Ca => self.realizable,
        }
    }
}

/// `<lintel> prime=1 C1=1 C2=1 B3=1 B=1 GL=1 STZ=1 R=1 CA=1`
impl fmt::Display for CriteriaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |v: bool| u8::from(v);
        write!(
            f,
            "{} prime={} C1={} C2={} B3={} B={} GL={} STZ={} R={} CA={}",
            self.lintel,
            b(self.prime),
            b(self.c1),
            b(self.c2),
            b(self.b3),
            b(self.b),
            b(self.gl),
            b(self.stz),
            b(self.r),
            b(self.realizable)
        )
    }
}

/// Evaluates every criterion, with certificates where found.
pub fn full_report(l: &SortedLintel) -> CriteriaReport {
    Evaluation::new(l).report()
}
