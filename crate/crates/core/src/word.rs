//! Double occurrence (Gauss) words and their conversion to lintels.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lintel::{Chord, Lintel, SortedLintel};

/// A word in which every symbol occurs exactly twice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussWord {
    symbols: Vec<String>,
}

impl GaussWord {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::Parse {
                column: 1,
                message: "empty word".into(),
            });
        }
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for s in &symbols {
            *counts.entry(s).or_default() += 1;
        }
        // report the first offending symbol in word order
        if let Some(bad) = symbols.iter().find(|s| counts[s.as_str()] != 2) {
            return Err(Error::NotDoubleOccurrence {
                symbol: bad.clone(),
                count: counts[bad.as_str()],
            });
        }
        Ok(GaussWord { symbols })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Chords `{(i, j) : i < j, a_i = a_j}` as a sorted lintel.
    pub fn to_lintel(&self) -> Result<SortedLintel> {
        let mut first_seen: HashMap<&str, usize> = HashMap::new();
        let mut chords = Vec::with_capacity(self.len() / 2);
        for (j, s) in self.symbols.iter().enumerate() {
            match first_seen.get(s.as_str()) {
                Some(&i) => {
                    if (j - i) % 2 == 0 {
                        return Err(Error::C1Violation {
                            item: format!("symbol `{s}`"),
                            first: i,
                            second: j,
                        });
                    }
                    chords.push(Chord::new(i, j));
                }
                None => {
                    first_seen.insert(s, j);
                }
            }
        }
        Ok(Lintel::new(chords)?.sorted())
    }
}

/// Converts a word to its sorted lintel.
pub fn from_gauss_word(w: &GaussWord) -> Result<SortedLintel> {
    w.to_lintel()
}

/// Labels chord `k` (in the lintel's own order) with symbol `k + 1`.
pub fn to_gauss_word(l: &Lintel) -> GaussWord {
    let mut symbols = vec![String::new(); l.points()];
    for (k, c) in l.chords().iter().enumerate() {
        let label = (k + 1).to_string();
        symbols[c.first] = label.clone();
        symbols[c.second] = label;
    }
    GaussWord { symbols }
}

/// Words with single-character symbols print concatenated (`12334124`);
/// anything longer is comma separated.
impl fmt::Display for GaussWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.symbols.iter().all(|s| s.chars().count() == 1);
        let sep = if compact { "" } else { "," };
        f.write_str(&self.symbols.join(sep))
    }
}

/// Splits on commas or whitespace when present, otherwise one symbol per character.
impl FromStr for GaussWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') || s.contains(char::is_whitespace) {
            GaussWord::new(
                s.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty()),
            )
        } else {
            GaussWord::new(s.chars().map(String::from))
        }
    }
}
