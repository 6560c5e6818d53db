//! Gauss diagrams as lintels: generation, canonization, enumeration, and
//! realizability criteria.
//!
//! A Gauss diagram with `n` chords is stored as a lintel, a perfect matching
//! of the points `0..2n` in which every chord joins points of opposite
//! parity (so Gauss's even-degree condition holds by construction).
//!
//! Runnable examples live in `examples/`:
//!
//! ```bash
//! cargo run --release --example canonize
//! cargo run --release --example table
//! ```

pub mod canon;
pub mod criteria;
pub mod enumeration;
pub mod error;
pub mod interlacement;
pub mod lintel;
pub mod oracle;
pub mod permutation;
pub mod persist;
pub mod render;
pub mod word;

pub use criteria::{
    check_b, check_b3, check_c1, check_c2, check_gl, check_r, check_stz, full_report,
    CriteriaReport, Criterion, Evaluation,
};
pub use enumeration::{
    enumerate, enumerate_many, find_discrepancies, DedupMode, DiscrepancyRecord, Enumeration,
    EnumerationOptions, EnumerationReport, FilterSpec,
};
pub use error::{Error, Result};
pub use interlacement::{
    gf2_add, gf2_is_idempotent, gf2_mul, interlacement_graph, DiagonalMask, Gf2Matrix,
    InterlacementGraph, VertexSubset,
};
pub use lintel::{l_compare, Chord, Lintel, SortedLintel};
pub use oracle::{diagram_graph, is_realizable, DiagramGraph, RotationChoice};
pub use permutation::{all_sorted_lintels, beta, Permutation, SortedLintels};
pub use persist::ResultsFile;
pub use word::{from_gauss_word, to_gauss_word, GaussWord};

/// `sort_lintel`: the sorted representative of the strong-equivalence class.
pub fn sort_lintel(l: &Lintel) -> SortedLintel {
    l.sorted()
}

/// Adds `s` to every entry modulo `2n`.
pub fn cyclic_shift(l: &Lintel, s: usize) -> Lintel {
    l.shifted(s)
}

/// Negates every entry modulo `2n`.
pub fn invert(l: &Lintel) -> Lintel {
    l.inverted()
}

/// The Lyndon lintel: L-minimum over all shifts of `l` and of its inversion.
pub fn canonical_lintel(l: &Lintel) -> SortedLintel {
    l.canonical()
}
