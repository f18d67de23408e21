//! Phrase model, height computation and decoding.
//!
//! A standard encoding is a list of [`Phrase::Literal`] and [`Phrase::Copy`]
//! phrases; a modified encoding is a list of [`Phrase::Run`] and
//! [`Phrase::Periodic`] phrases. The two are never mixed.
//!
//! Positions inside a copy are rerouted into the first period of the phrase:
//! position `i` of a copy starting at `b` with source `s` refers to
//! `s + (i - b) mod (b - s)`, and position `i` of a periodic copy with period
//! `p` refers to `s + (i - b) mod p`. Heights count these references.

mod format;
mod verify;

use std::fmt;
use std::str::FromStr;

use crate::error::EncodingError;
use crate::text::Text;

pub use format::{deserialize, serialize};
pub use verify::{verify, VerifyReport};

/// Upper bound on the referencing height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeightBound {
    Bounded(u32),
    Unbounded,
}

impl HeightBound {
    pub fn limit(self) -> Option<u32> {
        match self {
            HeightBound::Bounded(h) => Some(h),
            HeightBound::Unbounded => None,
        }
    }

    pub fn admits(self, height: u32) -> bool {
        self.limit().is_none_or(|h| height <= h)
    }
}

impl fmt::Display for HeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightBound::Bounded(h) => write!(f, "{h}"),
            HeightBound::Unbounded => f.write_str("inf"),
        }
    }
}

impl FromStr for HeightBound {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(HeightBound::Unbounded);
        }
        s.parse::<u32>()
            .map(HeightBound::Bounded)
            .map_err(|_| format!("height bound must be a non-negative integer or `inf`, got {s:?}"))
    }
}

impl From<u32> for HeightBound {
    fn from(h: u32) -> Self {
        HeightBound::Bounded(h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Lz77,
    Lzhb1,
    Lzhb2,
    Lzhb3,
    Lzhb4,
    /// Smallest standard encoding found by exhaustive search.
    Optimal,
    /// Smallest modified encoding found by exhaustive search.
    OptimalModified,
}

impl Variant {
    pub const GREEDY: [Variant; 5] = [
        Variant::Lz77,
        Variant::Lzhb1,
        Variant::Lzhb2,
        Variant::Lzhb3,
        Variant::Lzhb4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Lz77 => "lz77",
            Variant::Lzhb1 => "lzhb1",
            Variant::Lzhb2 => "lzhb2",
            Variant::Lzhb3 => "lzhb3",
            Variant::Lzhb4 => "lzhb4",
            Variant::Optimal => "opt",
            Variant::OptimalModified => "optmod",
        }
    }

    /// Whether encodings of this variant use run / periodic-copy phrases.
    pub fn is_modified(self) -> bool {
        matches!(self, Variant::Lzhb4 | Variant::OptimalModified)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let lower = s.trim().to_ascii_lowercase();
        [
            Variant::Lz77,
            Variant::Lzhb1,
            Variant::Lzhb2,
            Variant::Lzhb3,
            Variant::Lzhb4,
            Variant::Optimal,
            Variant::OptimalModified,
        ]
        .into_iter()
        .find(|v| v.name() == lower)
        .ok_or_else(|| format!("unknown variant {s:?}"))
    }
}

/// One phrase. Sources are 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phrase {
    Literal(u8),
    Copy { len: usize, src: usize },
    Run { len: usize, sym: u8 },
    Periodic { len: usize, src: usize, period: usize },
}

impl Phrase {
    /// Phrases are never empty.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        match *self {
            Phrase::Literal(_) => 1,
            Phrase::Copy { len, .. } | Phrase::Run { len, .. } | Phrase::Periodic { len, .. } => len,
        }
    }

    pub fn is_modified(&self) -> bool {
        matches!(self, Phrase::Run { .. } | Phrase::Periodic { .. })
    }

    /// Literal and run phrases are the roots of the referencing forest.
    pub fn is_root(&self) -> bool {
        matches!(self, Phrase::Literal(_) | Phrase::Run { .. })
    }

    fn kind(&self) -> &'static str {
        match self {
            Phrase::Literal(_) => "literal",
            Phrase::Copy { .. } => "copy",
            Phrase::Run { .. } => "run",
            Phrase::Periodic { .. } => "periodic",
        }
    }

    /// 0-based position referenced by the 0-based position `i` of this
    /// phrase, which starts at 0-based `start`. `None` for roots.
    #[inline]
    pub(crate) fn reference0(&self, start: usize, i: usize) -> Option<usize> {
        match *self {
            Phrase::Literal(_) | Phrase::Run { .. } => None,
            Phrase::Copy { src, .. } => {
                let s = src - 1;
                Some(s + (i - start) % (start - s))
            }
            Phrase::Periodic { src, period, .. } => Some(src - 1 + (i - start) % period),
        }
    }
}

/// A validated phrase list together with its variant tag and height bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Encoding {
    variant: Variant,
    bound: HeightBound,
    phrases: Vec<Phrase>,
    n: usize,
}

impl Encoding {
    /// Checks structural validity: phrase kinds match the variant, copies
    /// have length at least 2, sources precede their phrase, periodic copies
    /// have period at least 2 and length at least the period.
    pub fn new(variant: Variant, bound: HeightBound, phrases: Vec<Phrase>) -> Result<Self, EncodingError> {
        let mut b = 1usize;
        for (j, ph) in phrases.iter().enumerate() {
            let idx = j + 1;
            if ph.is_modified() != variant.is_modified() {
                return Err(EncodingError::MixedKinds {
                    phrase: idx,
                    kind: ph.kind(),
                    variant: variant.name(),
                });
            }
            let bad = |reason: String| Err(EncodingError::Malformed { phrase: idx, reason });
            match *ph {
                Phrase::Literal(_) => {}
                Phrase::Copy { len, src } => {
                    if len < 2 {
                        return bad(format!("copy length {len} < 2"));
                    }
                    if src == 0 || src >= b {
                        return bad(format!("source {src} not in [1, {b})"));
                    }
                }
                Phrase::Run { len, .. } => {
                    if len == 0 {
                        return bad("empty run".into());
                    }
                }
                Phrase::Periodic { len, src, period } => {
                    if period < 2 {
                        return bad(format!("period {period} < 2"));
                    }
                    if len < period {
                        return bad(format!("length {len} shorter than period {period}"));
                    }
                    if src == 0 || src >= b {
                        return bad(format!("source {src} not in [1, {b})"));
                    }
                }
            }
            b += ph.len();
        }
        Ok(Encoding {
            variant,
            bound,
            phrases,
            n: b - 1,
        })
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn bound(&self) -> HeightBound {
        self.bound
    }

    pub fn phrases(&self) -> &[Phrase] {
        &self.phrases
    }

    /// Length of the encoded text.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of phrases.
    pub fn size(&self) -> usize {
        self.phrases.len()
    }

    /// 1-based start position of every phrase.
    pub fn starts(&self) -> Vec<usize> {
        self.phrases
            .iter()
            .scan(1usize, |b, ph| {
                let start = *b;
                *b += ph.len();
                Some(start)
            })
            .collect()
    }
}

/// Materializes the text left to right.
pub fn decode(encoding: &Encoding) -> Text {
    let mut out: Vec<u8> = Vec::with_capacity(encoding.len());
    for ph in encoding.phrases() {
        let b = out.len();
        match *ph {
            Phrase::Literal(c) => out.push(c),
            Phrase::Run { len, sym } => out.extend(std::iter::repeat_n(sym, len)),
            Phrase::Copy { len, .. } | Phrase::Periodic { len, .. } => {
                for i in b..b + len {
                    let r = ph.reference0(b, i).expect("copy phrases reference");
                    let c = out[r];
                    out.push(c);
                }
            }
        }
    }
    Text::new(out)
}

/// Per-position referencing heights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    pub heights: Vec<u32>,
    pub max_height: u32,
}

impl HeightProfile {
    /// Height of 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.heights[i - 1]
    }

    pub fn mean(&self) -> f64 {
        if self.heights.is_empty() {
            0.0
        } else {
            self.heights.iter().map(|&h| h as f64).sum::<f64>() / self.heights.len() as f64
        }
    }
}

/// Heights of every position, computed left to right in O(n).
pub fn compute_heights(encoding: &Encoding) -> HeightProfile {
    let mut heights: Vec<u32> = Vec::with_capacity(encoding.len());
    let mut b = 0;
    for ph in encoding.phrases() {
        for i in b..b + ph.len() {
            let h = match ph.reference0(b, i) {
                None => 0,
                Some(r) => heights[r] + 1,
            };
            heights.push(h);
        }
        b += ph.len();
    }
    let max_height = heights.iter().copied().max().unwrap_or(0);
    HeightProfile { heights, max_height }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn worked_standard() -> Encoding {
        Encoding::new(
            Variant::Lz77,
            HeightBound::Unbounded,
            vec![
                Phrase::Literal(b'a'),
                Phrase::Literal(b'b'),
                Phrase::Copy { len: 3, src: 1 },
                Phrase::Literal(b'c'),
                Phrase::Copy { len: 5, src: 2 },
            ],
        )
        .unwrap()
    }

    pub(crate) fn worked_modified() -> Encoding {
        Encoding::new(
            Variant::Lzhb4,
            HeightBound::Unbounded,
            vec![
                Phrase::Run { len: 2, sym: b'a' },
                Phrase::Run { len: 1, sym: b'b' },
                Phrase::Periodic { len: 3, src: 2, period: 2 },
                Phrase::Run { len: 1, sym: b'c' },
                Phrase::Periodic { len: 4, src: 3, period: 2 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn decodes_worked_examples() {
        assert_eq!(decode(&worked_standard()), Text::from("ababacbabac"));
        assert_eq!(decode(&worked_modified()), Text::from("aababacbaba"));
        let one = Encoding::new(Variant::Lz77, HeightBound::Unbounded, vec![Phrase::Literal(b'x')]).unwrap();
        assert_eq!(decode(&one), Text::from("x"));
    }

    #[test]
    fn heights_of_worked_examples() {
        let e = Encoding::new(
            Variant::Lz77,
            HeightBound::Unbounded,
            vec![
                Phrase::Literal(b'a'),
                Phrase::Literal(b'a'),
                Phrase::Literal(b'b'),
                Phrase::Copy { len: 3, src: 2 },
                Phrase::Literal(b'c'),
                Phrase::Copy { len: 4, src: 3 },
            ],
        )
        .unwrap();
        assert_eq!(decode(&e), Text::from("aababacbaba"));
        assert_eq!(compute_heights(&e).heights, vec![0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 2]);
        assert_eq!(compute_heights(&worked_modified()).heights, vec![0, 0, 0, 1, 1, 1, 0, 1, 2, 1, 2]);
    }

    #[test]
    fn literal_heights_are_zero() {
        let e = Encoding::new(
            Variant::Lz77,
            HeightBound::Bounded(0),
            b"abca".iter().map(|&c| Phrase::Literal(c)).collect(),
        )
        .unwrap();
        let hp = compute_heights(&e);
        assert_eq!(hp.heights, vec![0; 4]);
        assert_eq!(hp.max_height, 0);
    }

    #[test]
    fn unary_self_reference_has_height_one() {
        let e = Encoding::new(
            Variant::Lz77,
            HeightBound::Unbounded,
            vec![Phrase::Literal(b'a'), Phrase::Copy { len: 9, src: 1 }],
        )
        .unwrap();
        assert_eq!(decode(&e), Text::new(vec![b'a'; 10]));
        assert_eq!(compute_heights(&e).max_height, 1);
    }

    #[test]
    fn starts_are_derived() {
        assert_eq!(worked_standard().starts(), vec![1, 2, 3, 6, 7]);
        assert_eq!(worked_modified().starts(), vec![1, 3, 4, 7, 8]);
        assert_eq!(worked_standard().len(), 11);
    }

    #[test]
    fn rejects_malformed_phrases() {
        let e = Encoding::new(Variant::Lz77, HeightBound::Unbounded, vec![Phrase::Copy { len: 2, src: 1 }]);
        assert!(matches!(e, Err(EncodingError::Malformed { phrase: 1, .. })));
        let e = Encoding::new(
            Variant::Lz77,
            HeightBound::Unbounded,
            vec![Phrase::Literal(b'a'), Phrase::Copy { len: 1, src: 1 }],
        );
        assert!(matches!(e, Err(EncodingError::Malformed { phrase: 2, .. })));
        let e = Encoding::new(
            Variant::Lz77,
            HeightBound::Unbounded,
            vec![Phrase::Literal(b'a'), Phrase::Run { len: 1, sym: b'a' }],
        );
        assert!(matches!(e, Err(EncodingError::MixedKinds { phrase: 2, .. })));
        let e = Encoding::new(
            Variant::Lzhb4,
            HeightBound::Unbounded,
            vec![Phrase::Run { len: 2, sym: b'a' }, Phrase::Periodic { len: 3, src: 1, period: 1 }],
        );
        assert!(matches!(e, Err(EncodingError::Malformed { phrase: 2, .. })));
    }

    #[test]
    fn height_bound_parsing() {
        assert_eq!("inf".parse::<HeightBound>().unwrap(), HeightBound::Unbounded);
        assert_eq!("8".parse::<HeightBound>().unwrap(), HeightBound::Bounded(8));
        assert!("-1".parse::<HeightBound>().is_err());
        assert!(HeightBound::Bounded(2).admits(2));
        assert!(!HeightBound::Bounded(2).admits(3));
        assert!(HeightBound::Unbounded.admits(u32::MAX));
    }
}
