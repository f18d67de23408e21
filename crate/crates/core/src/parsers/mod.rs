//! Greedy LZ77 / LZHB parsers, the exhaustive optimal parser, and generators.
//!
//! With an unbounded height every standard variant reproduces LZ77 exactly.
//! At height 0 the standard variants emit only literals and LZHB4 emits a
//! run-length encoding.

mod generators;
mod greedy;
mod online;
mod optimal;
mod state;

use crate::encoding::{Encoding, HeightBound, Variant};
use crate::text::Text;
use crate::text_index::OfflineIndex;

pub use generators::{gen_greedy_adversary, gen_tall_lz77_string, gen_versioned, TALL_MAX_BLOCKS};
pub use greedy::{parse_lz77_with, parse_lzhb1_with, parse_lzhb2_with};
pub use online::{parse_lzhb3, parse_lzhb4};
pub use optimal::{optimal_bruteforce, BRUTE_FORCE_MAX_LEN};

pub fn parse_lz77(text: &Text) -> Encoding {
    parse_lz77_with(&OfflineIndex::build(text))
}

pub fn parse_lzhb1(text: &Text, bound: HeightBound) -> Encoding {
    parse_lzhb1_with(&OfflineIndex::build(text), bound)
}

pub fn parse_lzhb2(text: &Text, bound: HeightBound) -> Encoding {
    parse_lzhb2_with(&OfflineIndex::build(text), bound)
}

/// Parses with a greedy variant. LZ77 ignores `bound`.
///
/// Panics for the exhaustive variants; use [`optimal_bruteforce`].
pub fn parse(text: &Text, variant: Variant, bound: HeightBound) -> Encoding {
    match variant {
        Variant::Lz77 => parse_lz77(text),
        Variant::Lzhb1 => parse_lzhb1(text, bound),
        Variant::Lzhb2 => parse_lzhb2(text, bound),
        Variant::Lzhb3 => parse_lzhb3(text, bound),
        Variant::Lzhb4 => parse_lzhb4(text, bound),
        Variant::Optimal | Variant::OptimalModified => {
            panic!("{variant} is not a greedy variant")
        }
    }
}

/// Like [`parse`], reusing a prebuilt offline index where the variant needs one.
pub fn parse_indexed(index: &OfflineIndex, variant: Variant, bound: HeightBound) -> Encoding {
    match variant {
        Variant::Lz77 => parse_lz77_with(index),
        Variant::Lzhb1 => parse_lzhb1_with(index, bound),
        Variant::Lzhb2 => parse_lzhb2_with(index, bound),
        _ => parse(index.text(), variant, bound),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::{compute_heights, decode, Phrase};

    fn lit(c: u8) -> Phrase {
        Phrase::Literal(c)
    }

    fn copy(len: usize, src: usize) -> Phrase {
        Phrase::Copy { len, src }
    }

    fn run(len: usize, sym: u8) -> Phrase {
        Phrase::Run { len, sym }
    }

    fn per(len: usize, src: usize, period: usize) -> Phrase {
        Phrase::Periodic { len, src, period }
    }

    fn boundaries(e: &Encoding, text: &[u8]) -> Vec<String> {
        let mut b = 0;
        e.phrases()
            .iter()
            .map(|p| {
                let s = String::from_utf8_lossy(&text[b..b + p.len()]).into_owned();
                b += p.len();
                s
            })
            .collect()
    }

    #[test]
    fn lz77_examples() {
        let e = parse_lz77(&Text::from("ababacbabac"));
        assert_eq!(e.phrases(), &[lit(b'a'), lit(b'b'), copy(3, 1), lit(b'c'), copy(5, 2)]);
        let e = parse_lz77(&Text::from("aababacbaba"));
        assert_eq!(
            e.phrases(),
            &[lit(b'a'), lit(b'a'), lit(b'b'), copy(3, 2), lit(b'c'), copy(4, 3)]
        );
        assert_eq!(parse_lz77(&Text::from("aaaa")).phrases(), &[lit(b'a'), copy(3, 1)]);
        assert_eq!(parse_lz77(&Text::default()).size(), 0);
    }

    #[test]
    fn lzhb1_cuts_at_saturated_source() {
        let t = Text::from("ababacbabac");
        let e = parse_lzhb1(&t, HeightBound::Bounded(1));
        assert_eq!(boundaries(&e, &t), ["a", "b", "aba", "c", "b", "a", "b", "a", "c"]);
        assert_eq!(e.phrases()[2], copy(3, 1));
    }

    #[test]
    fn lzhb2_examples() {
        let t = Text::new(vec![b'a'; 10]);
        let e = parse_lzhb2(&t, HeightBound::Bounded(1));
        assert_eq!(e.phrases(), &[lit(b'a'), copy(9, 1)]);
        assert_eq!(compute_heights(&e).max_height, 1);

        let t = Text::from("ababacbabac");
        let e = parse_lzhb2(&t, HeightBound::Bounded(1));
        // The phrase at 7 stops after "b": "ba" only occurs leftmost at 2,
        // whose second symbol has height 1.
        assert_eq!(e.phrases()[4], lit(b'b'));
        assert_eq!(decode(&e), t);
    }

    #[test]
    fn no_repeats_give_literals() {
        let t = Text::from("abc");
        for v in [Variant::Lzhb1, Variant::Lzhb2, Variant::Lzhb3] {
            for h in [HeightBound::Bounded(0), HeightBound::Bounded(3), HeightBound::Unbounded] {
                assert_eq!(parse(&t, v, h).phrases(), &[lit(b'a'), lit(b'b'), lit(b'c')]);
            }
        }
    }

    #[test]
    fn lzhb3_adversary() {
        let t = gen_greedy_adversary(2);
        let e = parse_lzhb3(&t, HeightBound::Bounded(1));
        assert_eq!(boundaries(&e, &t), ["a", "b", "ab", "c", "b", "ab", "b", "ab"]);
    }

    #[test]
    fn lzhb3_unary_self_reference() {
        let t = Text::new(vec![b'a'; 50]);
        let e = parse_lzhb3(&t, HeightBound::Bounded(3));
        assert!(e.size() <= 4, "{:?}", e.phrases());
        assert!(compute_heights(&e).max_height <= 3);
        assert_eq!(decode(&e), t);
    }

    #[test]
    fn lzhb4_examples() {
        let t = Text::from("abaxabcdababca");
        let e = parse_lzhb4(&t, HeightBound::Unbounded);
        assert_eq!(
            boundaries(&e, &t),
            ["a", "b", "a", "x", "ab", "c", "d", "abab", "c", "a"]
        );
        let t = Text::from("aababacbaba");
        let e = parse_lzhb4(&t, HeightBound::Unbounded);
        assert_eq!(
            e.phrases(),
            &[run(2, b'a'), run(1, b'b'), per(3, 2, 2), run(1, b'c'), per(4, 3, 2)]
        );
        let e = parse_lzhb4(&Text::from("aaaa"), HeightBound::Bounded(0));
        assert_eq!(e.phrases(), &[run(4, b'a')]);
    }

    #[test]
    fn height_zero_degenerates() {
        let t = Text::from("abababba");
        for v in [Variant::Lzhb1, Variant::Lzhb2, Variant::Lzhb3] {
            let e = parse(&t, v, HeightBound::Bounded(0));
            assert!(e.phrases().iter().all(|p| matches!(p, Phrase::Literal(_))));
        }
        let e = parse_lzhb4(&t, HeightBound::Bounded(0));
        assert_eq!(e.size(), 7);
    }
}
