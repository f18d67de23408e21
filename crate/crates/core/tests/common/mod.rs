//! Quadratic reference parsers written directly from the variant definitions.
//! Heights are tracked with the rerouted-reference recurrence, independently
//! of the library's height machinery.

#![allow(dead_code)]

use lzhb::{Encoding, HeightBound, Phrase, Text, Variant};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random text over the first `sigma` lowercase letters.
pub fn random_text(rng: &mut StdRng, n: usize, sigma: u8) -> Text {
    Text::new((0..n).map(|_| b'a' + rng.random_range(0..sigma)).collect::<Vec<u8>>())
}

/// Heights of `[b, b+len)` when `b+k` refers to `src + k mod cycle`, or
/// `None` once a height exceeds `limit`.
fn copy_heights(heights: &[u32], b: usize, src: usize, cycle: usize, len: usize, limit: Option<u32>) -> Option<Vec<u32>> {
    let mut all = heights[..b].to_vec();
    for k in 0..len {
        let h = all[src + k % cycle] + 1;
        if limit.is_some_and(|l| h > l) {
            return None;
        }
        all.push(h);
    }
    Some(all.split_off(b))
}

/// Whether `t[s..s+len) == t[b..b+len)`, reading past `b` as the decoder would.
fn matches(t: &[u8], s: usize, b: usize, len: usize) -> bool {
    b + len <= t.len() && (0..len).all(|k| t[s + k] == t[b + k])
}

fn finish(variant: Variant, bound: HeightBound, phrases: Vec<Phrase>) -> Encoding {
    Encoding::new(variant, bound, phrases).expect("reference parser emits valid phrases")
}

/// Standard greedy parse where `choose(t, heights, b)` returns the phrase
/// length and source (0-based), or `None` for a literal.
fn standard(
    text: &Text,
    variant: Variant,
    bound: HeightBound,
    mut choose: impl FnMut(&[u8], &[u32], usize) -> Option<(usize, usize)>,
) -> Encoding {
    let t = text.as_bytes();
    let mut heights: Vec<u32> = Vec::new();
    let mut phrases = Vec::new();
    while heights.len() < t.len() {
        let b = heights.len();
        match choose(t, &heights, b) {
            Some((len, s)) if len >= 2 => {
                let hs = copy_heights(&heights, b, s, b - s, len, bound.limit()).expect("chosen copy is valid");
                heights.extend(hs);
                phrases.push(Phrase::Copy { len, src: s + 1 });
            }
            _ => {
                heights.push(0);
                phrases.push(Phrase::Literal(t[b]));
            }
        }
    }
    finish(variant, bound, phrases)
}

/// Longest previous factor at `b` and its leftmost source.
fn lpf(t: &[u8], b: usize) -> (usize, usize) {
    let mut best = (0, 0);
    for s in 0..b {
        let len = (0..t.len() - b).take_while(|&k| t[s + k] == t[b + k]).count();
        if len > best.0 {
            best = (len, s);
        }
    }
    best
}

fn leftmost(t: &[u8], b: usize, len: usize) -> Option<usize> {
    (0..b).find(|&s| matches(t, s, b, len))
}

pub fn lz77(text: &Text) -> Encoding {
    standard(text, Variant::Lz77, HeightBound::Unbounded, |t, _, b| Some(lpf(t, b)))
}

/// Source fixed at the leftmost occurrence of the longest previous factor;
/// the length is the longest valid prefix of that copy.
pub fn lzhb1(text: &Text, bound: HeightBound) -> Encoding {
    standard(text, Variant::Lzhb1, bound, |t, h, b| {
        let (max, s) = lpf(t, b);
        let len = (0..=max)
            .rev()
            .find(|&len| copy_heights(h, b, s, b - s, len, bound.limit()).is_some())
            .unwrap_or(0);
        Some((len, s))
    })
}

/// Longest prefix whose every leftmost occurrence is a valid source.
pub fn lzhb2(text: &Text, bound: HeightBound) -> Encoding {
    standard(text, Variant::Lzhb2, bound, |t, h, b| {
        let mut best = None;
        for len in 1..=t.len() - b {
            match leftmost(t, b, len) {
                Some(s) if copy_heights(h, b, s, b - s, len, bound.limit()).is_some() => best = Some((len, s)),
                _ => break,
            }
        }
        best
    })
}

/// Longest prefix with some valid source; the leftmost valid source.
pub fn lzhb3(text: &Text, bound: HeightBound) -> Encoding {
    standard(text, Variant::Lzhb3, bound, |t, h, b| {
        let valid = |len: usize| {
            (0..b).find(|&s| matches(t, s, b, len) && copy_heights(h, b, s, b - s, len, bound.limit()).is_some())
        };
        (1..=t.len() - b)
            .rev()
            .find_map(|len| valid(len).map(|s| (len, s)))
    })
}

fn min_period(w: &[u8]) -> usize {
    (1..=w.len())
        .find(|&p| (p..w.len()).all(|i| w[i] == w[i - p]))
        .unwrap_or(0)
}

/// Maximal run, or the longest prefix all of whose prefixes have their
/// minimum-period prefix available at a valid, non-overlapping earlier
/// occurrence; the longer of the two wins, runs on ties.
pub fn lzhb4(text: &Text, bound: HeightBound) -> Encoding {
    let t = text.as_bytes();
    let mut heights: Vec<u32> = Vec::new();
    let mut phrases = Vec::new();
    let limit = bound.limit();
    while heights.len() < t.len() {
        let b = heights.len();
        let run = t[b..].iter().take_while(|&&c| c == t[b]).count();
        let valid_source = |p: usize| {
            (0..b).find(|&s| {
                s + p <= b
                    && t[s..s + p] == t[b..b + p]
                    && heights[s..s + p].iter().all(|&x| limit.is_none_or(|l| x < l))
            })
        };
        let mut periodic = 0;
        for len in 1..=t.len() - b {
            if valid_source(min_period(&t[b..b + len])).is_none() {
                break;
            }
            periodic = len;
        }
        if periodic > run {
            let p = min_period(&t[b..b + periodic]);
            let s = valid_source(p).unwrap();
            let hs = copy_heights(&heights, b, s, p, periodic, limit).expect("periodic copy is valid");
            heights.extend(hs);
            phrases.push(Phrase::Periodic { len: periodic, src: s + 1, period: p });
        } else {
            heights.extend(std::iter::repeat_n(0, run));
            phrases.push(Phrase::Run { len: run, sym: t[b] });
        }
    }
    finish(Variant::Lzhb4, bound, phrases)
}

pub fn reference(text: &Text, variant: Variant, bound: HeightBound) -> Encoding {
    match variant {
        Variant::Lz77 => lz77(text),
        Variant::Lzhb1 => lzhb1(text, bound),
        Variant::Lzhb2 => lzhb2(text, bound),
        Variant::Lzhb3 => lzhb3(text, bound),
        Variant::Lzhb4 => lzhb4(text, bound),
        _ => unreachable!("no reference parser for {variant}"),
    }
}

pub const HEIGHTS: [HeightBound; 6] = [
    HeightBound::Bounded(0),
    HeightBound::Bounded(1),
    HeightBound::Bounded(2),
    HeightBound::Bounded(3),
    HeightBound::Bounded(8),
    HeightBound::Unbounded,
];

pub const SIGMAS: [u8; 4] = [1, 2, 4, 26];

/// Longest previous factor at 0-based `i` (sources may overlap `i`).
pub fn naive_lpf(t: &[u8], i: usize) -> usize {
    lpf(t, i).0
}

/// Leftmost 0-based start `s < i` with `t[s..s+len) == t[i..i+len)`.
pub fn naive_lmocc(t: &[u8], i: usize, len: usize) -> Option<usize> {
    leftmost(t, i, len)
}

/// Longest prefix of `query` occurring in `masked` without touching a masked
/// (`None`) entry, with its leftmost 0-based start.
pub fn naive_masked_query(masked: &[Option<u8>], query: &[u8]) -> (usize, Option<usize>) {
    let mut best = (0, None);
    for s in 0..masked.len() {
        let l = query
            .iter()
            .zip(&masked[s..])
            .take_while(|(q, m)| **m == Some(**q))
            .count();
        if l > best.0 {
            best = (l, Some(s));
        }
    }
    best
}
