//! Prime classes where two criteria disagree, e.g. B against the oracle.
//!
//! ```bash
//! cargo run --release --example counterexamples -- 10 b ca
//! ```

use gauss_lintel::{find_discrepancies, Criterion, EnumerationOptions};

fn main() -> gauss_lintel::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(Ok(9), |s| s.parse()).expect("size is an integer");
    let a: Criterion = args.get(1).map_or(Ok(Criterion::B), |s| s.parse())?;
    let b: Criterion = args.get(2).map_or(Ok(Criterion::Ca), |s| s.parse())?;

    let records = find_discrepancies(n, a, b, &EnumerationOptions::from_env()?)?;
    for r in &records {
        println!("{}", r.report);
    }
    println!("size={n} a={a} b={b} count={}", records.len());
    Ok(())
}
