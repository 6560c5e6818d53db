//! Sorting, the dihedral moves and canonical (Lyndon) forms.
//!
//! ```bash
//! cargo run --example canonize -- "[[0,5],[1,2],[3,4]]"
//! ```

use gauss_lintel::{canonical_lintel, cyclic_shift, invert, sort_lintel, Lintel};

fn main() -> gauss_lintel::Result<()> {
    let input = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "[[4,7],[8,1],[5,0],[2,9],[6,3]]".to_string());
    let l: Lintel = input.parse()?;

    println!("input      {l}");
    println!("sorted     {}", sort_lintel(&l));
    println!("shift +1   {}", cyclic_shift(&l, 1));
    println!("inverted   {}", invert(&l));

    let canon = canonical_lintel(&l);
    println!("canonical  {canon}");

    // Every member of the class lands on the same representative.
    let m = 2 * l.size();
    for s in 0..m {
        assert_eq!(canonical_lintel(&cyclic_shift(&l, s)), canon);
        assert_eq!(canonical_lintel(&invert(&cyclic_shift(&l, s))), canon);
    }
    println!("all {} shifts and reflections agree", 2 * m);
    Ok(())
}
