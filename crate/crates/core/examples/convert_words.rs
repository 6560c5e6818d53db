//! Gauss words to lintels and back.
//!
//! ```bash
//! cargo run --example convert_words -- 12334124 1212
//! ```

use gauss_lintel::{from_gauss_word, to_gauss_word, GaussWord, Lintel};

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["12334124".into(), "123123".into(), "a,b,a,b".into(), "1212".into()];
    }
    for word in args {
        let parsed = word.parse::<GaussWord>().and_then(|w| from_gauss_word(&w));
        match parsed {
            Ok(l) => {
                let back = to_gauss_word(&Lintel::from(&l));
                println!("{word:>12} -> {l} -> {back}");
            }
            Err(e) => println!("{word:>12} -> error: {e}"),
        }
    }
}
