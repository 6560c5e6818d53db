//! The genus oracle on its own: builds the 4-regular graph of a diagram and
//! searches crossing rotations for a spherical embedding.
//!
//! ```bash
//! cargo run --example realizability_oracle -- "[[0,5],[1,6],[2,3],[4,7]]"
//! ```

use gauss_lintel::{diagram_graph, SortedLintel};

fn main() -> gauss_lintel::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "[[0,5],[1,6],[2,3],[4,7]]".to_string());
    let l: SortedLintel = input.parse()?;
    let d = diagram_graph(&l);
    println!(
        "{l}: {} crossings, {} arcs, {} half-edges",
        d.crossing_count(),
        d.arc_count(),
        d.half_edge_count()
    );

    match d.spherical_embedding() {
        Some(choice) => {
            let faces = d.trace_faces(choice);
            println!("planar: rotation bits {:0w$b}", choice.bits, w = choice.len);
            println!("faces {} with lengths {faces:?}", faces.len());
            println!("euler characteristic {}", d.euler_characteristic(choice));
        }
        None => println!("no rotation choice gives a sphere; the diagram is not realizable"),
    }
    Ok(())
}
