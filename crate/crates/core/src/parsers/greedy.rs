//! LZ77, LZHB1 and LZHB2: greedy parsers driven by the offline index.

use crate::encoding::{Encoding, HeightBound, Phrase, Variant};
use crate::text_index::OfflineIndex;

use super::state::HeightState;

/// Greedy LZ77 with self-references; every copy uses the leftmost source of
/// the longest previous factor.
pub fn parse_lz77_with(index: &OfflineIndex) -> Encoding {
    let text = index.text();
    let n = text.len();
    let mut phrases = Vec::new();
    let mut b = 0;
    while b < n {
        let lpf = index.lpf0(b);
        if lpf >= 2 {
            let src = index.lpf_source0(b).expect("lpf >= 1 has a source");
            phrases.push(Phrase::Copy { len: lpf, src: src + 1 });
            b += lpf;
        } else {
            phrases.push(Phrase::Literal(text[b]));
            b += 1;
        }
    }
    Encoding::new(Variant::Lz77, HeightBound::Unbounded, phrases).expect("valid LZ77 phrases")
}

/// LZHB1: the source is fixed to the leftmost occurrence of the longest
/// previous factor, and the phrase is cut at the first source position whose
/// height is already at the bound.
pub fn parse_lzhb1_with(index: &OfflineIndex, bound: HeightBound) -> Encoding {
    let text = index.text();
    let n = text.len();
    let mut state = HeightState::new(n, bound);
    let mut phrases = Vec::new();
    while state.len() < n {
        let b = state.len();
        let lpf = index.lpf0(b);
        let mut phrase = Phrase::Literal(text[b]);
        if lpf >= 2 {
            let s = index.lpf_source0(b).expect("lpf >= 1 has a source");
            // Positions at or past b repeat the first period, already checked.
            let scan_end = b.min(s + lpf);
            let len = (s..scan_end)
                .position(|k| !state.below_bound(k))
                .unwrap_or(lpf);
            if len >= 2 {
                phrase = Phrase::Copy { len, src: s + 1 };
            }
        }
        state.push_phrase(&phrase, |_, _| {});
        phrases.push(phrase);
    }
    Encoding::new(Variant::Lzhb1, bound, phrases).expect("valid LZHB1 phrases")
}

/// LZHB2: grows the phrase one symbol at a time, each time taking the
/// leftmost occurrence of the current prefix, and stops at the first length
/// whose leftmost occurrence violates the bound.
pub fn parse_lzhb2_with(index: &OfflineIndex, bound: HeightBound) -> Encoding {
    let text = index.text();
    let tree = index.tree();
    let n = text.len();
    let mut state = HeightState::new(n, bound);
    let mut phrases = Vec::new();
    while state.len() < n {
        let b = state.len();
        let mut cursor = index.cursor();
        let mut best: Option<(usize, usize)> = None;
        let mut len = 0;
        while b + len < n {
            let moved = cursor.advance(tree, text[b + len] as u32);
            debug_assert!(moved, "suffix of the indexed text must be walkable");
            len += 1;
            let s = cursor.leftmost(tree).expect("non-empty match");
            if s >= b || !state.clear(s, b.min(s + len)) {
                break;
            }
            best = Some((len, s));
        }
        let phrase = match best {
            Some((len, s)) if len >= 2 => Phrase::Copy { len, src: s + 1 },
            _ => Phrase::Literal(text[b]),
        };
        state.push_phrase(&phrase, |_, _| {});
        phrases.push(phrase);
    }
    Encoding::new(Variant::Lzhb2, bound, phrases).expect("valid LZHB2 phrases")
}
