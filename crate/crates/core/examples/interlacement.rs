//! Interlacement graph of a diagram, its DOT form, and vertex reductions.
//!
//! ```bash
//! cargo run --example interlacement -- "[[0,3],[1,4],[2,5]]" | dot -Tpng > g.png
//! ```

use gauss_lintel::{interlacement_graph, SortedLintel};

fn main() -> gauss_lintel::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "[[0,5],[1,6],[2,3],[4,7]]".to_string());
    let l: SortedLintel = input.parse()?;
    let g = interlacement_graph(&l);

    print!("{}", g.to_dot());
    eprintln!("vertices {}, edges {}, prime {}", g.size(), g.edges().count(), g.is_prime());
    for v in 0..g.size() {
        let r = g.reduce(v)?;
        eprintln!("degree({v}) = {}; reduce({v}) has edges {:?}", g.degree(v), r.edges().collect::<Vec<_>>());
    }
    Ok(())
}
