//! LZHB3 and LZHB4: parsers over an online index of the masked prefix.
//!
//! After each phrase its symbols are appended to the index, with every
//! position whose height reached the bound masked out. Prefix queries on the
//! index therefore only ever return sources that keep the bound.

use crate::encoding::{Encoding, HeightBound, Phrase, Variant};
use crate::text::Text;
use crate::text_index::{window_leftmost_occurrence0, MinPeriodTracker, OnlineIndex};

use super::state::HeightState;

fn commit(index: &mut OnlineIndex, state: &mut HeightState, text: &[u8], phrase: &Phrase) {
    state.push_phrase(phrase, |i, saturated| index.append(text[i], saturated));
}

/// LZHB3: the longest prefix having some height-valid previous occurrence,
/// sourced at the leftmost such occurrence.
///
/// The masked index finds the longest prefix `x` with a valid occurrence
/// ending before the phrase. A longer, self-referencing occurrence must
/// start inside `[max(barrier, b - |x|), b)`, where `barrier` is the first
/// position after the last saturated one; the leftmost occurrence of `x`
/// there is extended symbol by symbol.
pub fn parse_lzhb3(text: &Text, bound: HeightBound) -> Encoding {
    let n = text.len();
    let mut index = OnlineIndex::with_capacity(n);
    let mut state = HeightState::new(n, bound);
    let mut phrases = Vec::new();
    while state.len() < n {
        let b = state.len();
        let (mut len, mut src) = index.prefix_query0(&text[b..]);
        if len > 0 {
            let window_start = state.barrier().max(b - len);
            if let Some(k) = window_leftmost_occurrence0(text, b, len, window_start, b) {
                if b + len < n && text[k + len] == text[b + len] {
                    src = Some(k);
                    while b + len < n && text[k + len] == text[b + len] {
                        len += 1;
                    }
                }
            }
        }
        let phrase = match src {
            Some(s) if len >= 2 => Phrase::Copy { len, src: s + 1 },
            _ => Phrase::Literal(text[b]),
        };
        commit(&mut index, &mut state, text, &phrase);
        phrases.push(phrase);
    }
    Encoding::new(Variant::Lzhb3, bound, phrases).expect("valid LZHB3 phrases")
}

/// LZHB4: modified encoding. A phrase is the longer of the maximal unary run
/// at `b` and the longest prefix all of whose prefixes have a valid previous
/// occurrence of their minimum-period prefix.
///
/// The minimum period of the growing prefix is tracked with a border array
/// and never decreases, so the index is only walked further when the period
/// grows.
pub fn parse_lzhb4(text: &Text, bound: HeightBound) -> Encoding {
    let n = text.len();
    let mut index = OnlineIndex::with_capacity(n);
    let mut state = HeightState::new(n, bound);
    let mut phrases = Vec::new();
    while state.len() < n {
        let b = state.len();
        let sym = text[b];
        let run = text[b..].iter().take_while(|&&c| c == sym).count();

        let mut tracker = MinPeriodTracker::new();
        let mut cursor = index.cursor();
        let mut depth = 0;
        // (length, period, source) of the longest valid periodic prefix.
        let mut periodic: Option<(usize, usize, usize)> = None;
        'grow: for len in 1..=n - b {
            let period = tracker.push(text[b + len - 1]);
            while depth < period {
                if !index.advance(&mut cursor, text[b + depth]) {
                    break 'grow;
                }
                depth += 1;
            }
            let s = index.leftmost(&cursor).expect("non-empty match");
            periodic = Some((len, period, s));
        }

        let phrase = match periodic {
            Some((len, period, s)) if len > run => {
                debug_assert!(period >= 2);
                Phrase::Periodic {
                    len,
                    src: s + 1,
                    period,
                }
            }
            _ => Phrase::Run { len: run, sym },
        };
        commit(&mut index, &mut state, text, &phrase);
        phrases.push(phrase);
    }
    Encoding::new(Variant::Lzhb4, bound, phrases).expect("valid LZHB4 phrases")
}
