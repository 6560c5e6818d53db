//! Chord-diagram drawing as SVG.
//!
//! ```bash
//! cargo run --example render_svg -- "[[0,3],[1,4],[2,5]]" > trefoil.svg
//! ```

use gauss_lintel::render::{render_svg, SvgOptions};
use gauss_lintel::SortedLintel;

fn main() -> gauss_lintel::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| {
        "[[0,5],[1,8],[2,9],[3,14],[4,15],[6,13],[7,12],[10,17],[11,16]]".to_string()
    });
    let l: SortedLintel = input.parse()?;
    let opts = SvgOptions {
        radius: 200.0,
        ..SvgOptions::default()
    };
    print!("{}", render_svg(&l, &opts));
    Ok(())
}
