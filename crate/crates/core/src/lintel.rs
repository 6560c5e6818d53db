//! Lintels: perfect matchings of `{0, .., 2n-1}` in which every chord joins
//! an even position to an odd one.
//!
//! A [`Lintel`] is the loose input form (chords in any order, endpoints in
//! any order). A [`SortedLintel`] is the unique strongly-equivalent
//! representative: each chord is `(low, high)` and chords are ordered by their
//! low endpoint. Its derived [`Ord`] is the L-order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::canon;
use crate::error::{Error, Result};

/// Largest supported number of chords. Interlacement rows are one `u64` each.
pub const MAX_CHORDS: usize = 64;

/// A pair of positions on the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord {
    pub first: usize,
    pub second: usize,
}

impl Chord {
    pub const fn new(first: usize, second: usize) -> Self {
        Chord { first, second }
    }

    /// The same chord with `first < second`.
    pub fn sorted(self) -> Self {
        if self.first <= self.second {
            self
        } else {
            Chord::new(self.second, self.first)
        }
    }

    /// Whether `pos` lies strictly between the endpoints.
    pub fn strictly_contains(&self, pos: usize) -> bool {
        let Chord { first, second } = self.sorted();
        first < pos && pos < second
    }
}

impl From<(usize, usize)> for Chord {
    fn from((first, second): (usize, usize)) -> Self {
        Chord::new(first, second)
    }
}

fn validate(chords: &[Chord]) -> Result<()> {
    let n = chords.len();
    if n == 0 {
        return Err(Error::InvalidLintel("a lintel needs at least one chord".into()));
    }
    if n > MAX_CHORDS {
        return Err(Error::InvalidLintel(format!(
            "{n} chords exceeds the supported maximum of {MAX_CHORDS}"
        )));
    }
    let points = 2 * n;
    let mut seen = vec![false; points];
    for c in chords {
        for p in [c.first, c.second] {
            if p >= points {
                return Err(Error::InvalidLintel(format!(
                    "endpoint {p} outside 0..{points}"
                )));
            }
            if seen[p] {
                return Err(Error::InvalidLintel(format!("endpoint {p} used twice")));
            }
            seen[p] = true;
        }
        if c.first.abs_diff(c.second) % 2 == 0 {
            return Err(Error::C1Violation {
                item: format!("chord [{},{}]", c.first, c.second),
                first: c.first,
                second: c.second,
            });
        }
    }
    Ok(())
}

/// A validated lintel whose chords may be in any order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lintel {
    chords: Vec<Chord>,
}

impl Lintel {
    pub fn new(chords: Vec<Chord>) -> Result<Self> {
        validate(&chords)?;
        Ok(Lintel { chords })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(pairs.iter().copied().map(Chord::from).collect())
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Number of chords.
    pub fn size(&self) -> usize {
        self.chords.len()
    }

    /// Number of points on the circle, `2n`.
    pub fn points(&self) -> usize {
        2 * self.chords.len()
    }

    /// Algorithm 1: sort inside each chord, then sort chords by first entry.
    pub fn sorted(&self) -> SortedLintel {
        let mut chords: Vec<Chord> = self.chords.iter().map(|c| c.sorted()).collect();
        chords.sort_unstable();
        SortedLintel { chords }
    }

    /// Adds `s` to every entry modulo `2n`.
    pub fn shifted(&self, s: usize) -> Lintel {
        let m = self.points();
        let s = s % m;
        self.map_entries(|e| (e + s) % m)
    }

    /// Replaces every entry `e` with `-e` modulo `2n`.
    pub fn inverted(&self) -> Lintel {
        let m = self.points();
        self.map_entries(|e| (m - e) % m)
    }

    fn map_entries(&self, f: impl Fn(usize) -> usize) -> Lintel {
        Lintel {
            chords: self
                .chords
                .iter()
                .map(|c| Chord::new(f(c.first), f(c.second)))
                .collect(),
        }
    }

    /// The Lyndon lintel of the equivalence class.
    pub fn canonical(&self) -> SortedLintel {
        self.sorted().canonical()
    }
}

impl From<SortedLintel> for Lintel {
    fn from(l: SortedLintel) -> Self {
        Lintel { chords: l.chords }
    }
}

impl From<&SortedLintel> for Lintel {
    fn from(l: &SortedLintel) -> Self {
        Lintel {
            chords: l.chords.clone(),
        }
    }
}

/// A sorted lintel. Ordering is the L-order (lexicographic over the flattened
/// endpoint sequence); it is only meaningful between lintels of equal size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SortedLintel {
    chords: Vec<Chord>,
}

impl SortedLintel {
    /// Accepts chords only if they already satisfy the sorted-lintel shape.
    pub fn new(chords: Vec<Chord>) -> Result<Self> {
        validate(&chords)?;
        if chords.iter().any(|c| c.first >= c.second) {
            return Err(Error::InvalidLintel("chord endpoints are not sorted".into()));
        }
        if chords.windows(2).any(|w| w[0].first >= w[1].first) {
            return Err(Error::InvalidLintel("chords are not sorted by first entry".into()));
        }
        Ok(SortedLintel { chords })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(pairs.iter().copied().map(Chord::from).collect())
    }

    /// Builds a sorted lintel from a partner array (`partner[p]` is the other
    /// endpoint of the chord through `p`). The array must be a valid lintel
    /// matching; this is checked only in debug builds.
    pub fn from_partner(partner: &[u8]) -> Self {
        let chords: Vec<Chord> = partner
            .iter()
            .enumerate()
            .filter(|&(p, &q)| p < q as usize)
            .map(|(p, &q)| Chord::new(p, q as usize))
            .collect();
        debug_assert!(validate(&chords).is_ok() && chords.len() * 2 == partner.len());
        SortedLintel { chords }
    }

    pub fn partner(&self) -> Vec<u8> {
        let mut partner = vec![0u8; self.points()];
        for c in &self.chords {
            partner[c.first] = c.second as u8;
            partner[c.second] = c.first as u8;
        }
        partner
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn size(&self) -> usize {
        self.chords.len()
    }

    pub fn points(&self) -> usize {
        2 * self.chords.len()
    }

    /// Index of the chord owning each position.
    pub fn chord_of_position(&self) -> Vec<usize> {
        let mut owner = vec![0; self.points()];
        for (k, c) in self.chords.iter().enumerate() {
            owner[c.first] = k;
            owner[c.second] = k;
        }
        owner
    }

    /// L-order minimum over all shifts of the lintel and of its inversion.
    pub fn canonical(&self) -> SortedLintel {
        let partner = self.partner();
        let mut out = vec![0u8; partner.len()];
        canon::canonical_partner(&partner, &mut out);
        SortedLintel::from_partner(&out)
    }

    /// Whether this lintel is the L-minimum of its equivalence class.
    pub fn is_canonical(&self) -> bool {
        canon::is_lyndon(&self.partner())
    }

    pub fn shifted(&self, s: usize) -> Lintel {
        Lintel::from(self).shifted(s)
    }

    pub fn inverted(&self) -> Lintel {
        Lintel::from(self).inverted()
    }
}

/// Compares two sorted lintels in L-order.
pub fn l_compare(a: &SortedLintel, b: &SortedLintel) -> Result<Ordering> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.size(),
            right: b.size(),
        });
    }
    Ok(a.cmp(b))
}

fn write_chords(f: &mut fmt::Formatter<'_>, chords: &[Chord]) -> fmt::Result {
    f.write_str("[")?;
    for (i, c) in chords.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "[{},{}]", c.first, c.second)?;
    }
    f.write_str("]")
}

impl fmt::Display for Lintel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_chords(f, &self.chords)
    }
}

impl fmt::Display for SortedLintel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_chords(f, &self.chords)
    }
}

/// Parses the bracketed listing form `[[0,5],[1,8],...]`.
///
/// Whitespace anywhere is ignored and one trailing `.` is accepted.
pub fn parse_chords(input: &str) -> Result<Vec<Chord>> {
    let mut cursor = Cursor::new(input);
    cursor.expect('[')?;
    let mut chords = Vec::new();
    loop {
        cursor.expect('[')?;
        let first = cursor.number()?;
        cursor.expect(',')?;
        let second = cursor.number()?;
        cursor.expect(']')?;
        chords.push(Chord::new(first, second));
        match cursor.next_token() {
            Some((_, ',')) => continue,
            Some((_, ']')) => break,
            Some((col, c)) => return Err(parse_error(col, format!("expected `,` or `]`, found `{c}`"))),
            None => return Err(parse_error(cursor.end_column(), "unexpected end of input")),
        }
    }
    if let Some((_, '.')) = cursor.peek() {
        cursor.next_token();
    }
    if let Some((col, c)) = cursor.next_token() {
        return Err(parse_error(col, format!("trailing input `{c}`")));
    }
    Ok(chords)
}

fn parse_error(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::iter::Enumerate<std::str::Chars<'a>>>,
    len: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Cursor {
            chars: input.chars().enumerate().peekable(),
            len: input.chars().count(),
        }
    }

    fn end_column(&self) -> usize {
        self.len + 1
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    /// Columns are 1-based.
    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.peek().map(|&(i, c)| (i + 1, c))
    }

    fn next_token(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.next().map(|(i, c)| (i + 1, c))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.next_token() {
            Some((_, c)) if c == want => Ok(()),
            Some((col, c)) => Err(parse_error(col, format!("expected `{want}`, found `{c}`"))),
            None => Err(parse_error(self.end_column(), format!("expected `{want}`, found end of input"))),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = match self.peek() {
            Some((col, c)) if c.is_ascii_digit() => col,
            Some((col, c)) => return Err(parse_error(col, format!("expected a number, found `{c}`"))),
            None => return Err(parse_error(self.end_column(), "expected a number")),
        };
        let mut value: usize = 0;
        while let Some(&(_, c)) = self.chars.peek() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| parse_error(start, "number too large"))?;
            self.chars.next();
        }
        Ok(value)
    }
}

impl FromStr for Lintel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lintel::new(parse_chords(s)?)
    }
}

/// Parsing a sorted lintel accepts any lintel and sorts it.
impl FromStr for SortedLintel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<Lintel>()?.sorted())
    }
}
