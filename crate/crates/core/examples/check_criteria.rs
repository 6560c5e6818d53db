//! Full criteria report for lintels or Gauss words, one per argument.
//!
//! ```bash
//! cargo run --release --example check_criteria -- 123123 "[[0,3],[1,4],[2,5]]"
//! ```

use gauss_lintel::{full_report, GaussWord, SortedLintel};

fn parse(s: &str) -> gauss_lintel::Result<SortedLintel> {
    if s.trim_start().starts_with('[') {
        s.parse()
    } else {
        s.parse::<GaussWord>()?.to_lintel()
    }
}

fn main() -> gauss_lintel::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec![
            "123123".into(),
            "[[0,5],[1,8],[2,9],[3,14],[4,15],[6,13],[7,12],[10,17],[11,16]]".into(),
        ];
    }
    for a in &args {
        let r = full_report(&parse(a)?);
        println!("{r}");
        if let Some(mask) = r.stz_certificate {
            println!("  diagonal {:0width$b}", mask.bits, width = mask.len);
        }
        if let Some(subset) = r.r_certificate {
            println!("  subset   {:0width$b}", subset.bits, width = subset.len);
        }
    }
    Ok(())
}
