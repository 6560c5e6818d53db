//! Counts prime classes passing CA, STZ, B and GL for a range of sizes.
//!
//! ```bash
//! cargo run --release --example table -- 3 9
//! ```

use gauss_lintel::{enumerate_many, Criterion, EnumerationOptions, FilterSpec};

fn main() -> gauss_lintel::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("sizes are integers"))
        .collect();
    let (lo, hi) = match args.as_slice() {
        [] => (3, 8),
        [n] => (*n, *n),
        [lo, hi, ..] => (*lo, *hi),
    };

    let rows = [Criterion::Ca, Criterion::Stz, Criterion::B, Criterion::Gl];
    let specs: Vec<FilterSpec> = rows.iter().map(|&c| FilterSpec::prime_and(c)).collect();
    let opts = EnumerationOptions::from_env()?;

    print!("{:<6}", "size");
    for c in rows {
        print!("{:>8}", c.label());
    }
    println!("{:>10}{:>10}", "classes", "seconds");
    for n in lo..=hi {
        let e = enumerate_many(n, &specs, &opts)?;
        print!("{n:<6}");
        for s in &specs {
            print!("{:>8}", e.count(s).unwrap_or(0));
        }
        println!(
            "{:>10}{:>10.2}",
            e.report.total_canonical,
            e.report.elapsed.as_secs_f64()
        );
    }
    Ok(())
}
