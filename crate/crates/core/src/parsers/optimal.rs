//! Exhaustive search for the smallest height-bounded encoding of tiny texts.

use std::collections::HashMap;

use crate::encoding::{Encoding, HeightBound, Phrase, Variant};
use crate::error::BudgetError;
use crate::text::Text;
use crate::text_index::MinPeriodTracker;

/// Largest text length accepted by [`optimal_bruteforce`].
pub const BRUTE_FORCE_MAX_LEN: usize = 16;

/// Smallest encoding of `text` whose height is at most `bound`.
///
/// Standard encodings consider every literal and every copy `(len, src)`
/// with `len >= 2` and any earlier source (self-references included).
/// Modified encodings consider every run and every periodic copy whose
/// period is the minimum period of the phrase, sourced at any earlier
/// occurrence of the first period.
///
/// Among optimal encodings the result is the first in the order: longer
/// phrases first at each boundary, then smaller sources.
pub fn optimal_bruteforce(text: &Text, bound: HeightBound, modified: bool) -> Result<Encoding, BudgetError> {
    let n = text.len();
    if n > BRUTE_FORCE_MAX_LEN {
        return Err(BudgetError {
            n,
            max: BRUTE_FORCE_MAX_LEN,
        });
    }
    // Heights never exceed n - 1, so larger bounds cannot bind.
    let limit = bound.limit().filter(|&h| (h as usize) < n.saturating_sub(1));
    let mut search = Search {
        text,
        limit,
        modified,
        periods: (0..n).map(|b| prefix_periods(&text[b..])).collect(),
        memo: HashMap::new(),
    };

    let mut phrases = Vec::new();
    let mut heights: Vec<u8> = Vec::with_capacity(n);
    while heights.len() < n {
        let target = search.best(&heights);
        let (phrase, next) = search
            .options(&heights)
            .into_iter()
            .find(|(_, next)| 1 + search.best(next) == target)
            .expect("an optimal option exists");
        phrases.push(phrase);
        heights = next;
    }
    let variant = if modified { Variant::OptimalModified } else { Variant::Optimal };
    Ok(Encoding::new(variant, bound, phrases).expect("search emits valid phrases"))
}

fn prefix_periods(w: &[u8]) -> Vec<usize> {
    let mut t = MinPeriodTracker::new();
    w.iter().map(|&c| t.push(c)).collect()
}

struct Search<'a> {
    text: &'a [u8],
    limit: Option<u32>,
    modified: bool,
    /// `periods[b][len - 1]` is the minimum period of `text[b..b+len)`.
    periods: Vec<Vec<usize>>,
    memo: HashMap<Vec<u8>, u32>,
}

impl Search<'_> {
    fn key(&self, heights: &[u8]) -> Vec<u8> {
        match self.limit {
            Some(_) => heights.to_vec(),
            // Only the position matters; encode it as a length.
            None => vec![0; heights.len()],
        }
    }

    /// Minimum number of phrases covering the rest of the text.
    fn best(&mut self, heights: &[u8]) -> u32 {
        if heights.len() == self.text.len() {
            return 0;
        }
        let key = self.key(heights);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut best = u32::MAX;
        for (_, next) in self.options(heights) {
            if next.len() == self.text.len() {
                best = 1;
                break;
            }
            best = best.min(1 + self.best(&next));
        }
        self.memo.insert(key, best);
        best
    }

    /// Heights of `[b, b+len)` when position `b+k` refers to
    /// `src + k mod cycle`; `None` if the bound is exceeded.
    fn extend(&self, heights: &[u8], src: usize, cycle: usize, len: usize) -> Option<Vec<u8>> {
        let b = heights.len();
        let mut next = Vec::with_capacity(b + len);
        next.extend_from_slice(heights);
        for k in 0..len {
            let h = next[src + k % cycle] + 1;
            if self.limit.is_some_and(|l| h as u32 > l) {
                return None;
            }
            next.push(h);
        }
        Some(next)
    }

    /// Every admissible next phrase in search order, with the resulting
    /// height prefix.
    fn options(&self, heights: &[u8]) -> Vec<(Phrase, Vec<u8>)> {
        let t = self.text;
        let n = t.len();
        let b = heights.len();
        let mut out = Vec::new();
        let with_zeros = |len: usize| {
            let mut next = heights.to_vec();
            next.resize(b + len, 0);
            next
        };
        if self.modified {
            let periods = &self.periods[b];
            let mut runs = Vec::new();
            for len in (1..=n - b).rev() {
                let p = periods[len - 1];
                if p == 1 {
                    runs.push(len);
                    continue;
                }
                for s in 0..b {
                    if s + p <= n && t[s..s + p] == t[b..b + p] {
                        if let Some(next) = self.extend(heights, s, p, len) {
                            out.push((
                                Phrase::Periodic {
                                    len,
                                    src: s + 1,
                                    period: p,
                                },
                                next,
                            ));
                        }
                    }
                }
            }
            // Runs are prefixes of the phrase, so they are all shorter than
            // any periodic option; keep the overall longest-first order.
            for len in runs {
                out.push((Phrase::Run { len, sym: t[b] }, with_zeros(len)));
            }
        } else {
            for len in (2..=n - b).rev() {
                for s in 0..b {
                    if (0..len).all(|k| t[s + k] == t[b + k]) {
                        if let Some(next) = self.extend(heights, s, b - s, len) {
                            out.push((Phrase::Copy { len, src: s + 1 }, next));
                        }
                    }
                }
            }
            out.push((Phrase::Literal(t[b]), with_zeros(1)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::compute_heights;
    use crate::encoding::decode;

    #[test]
    fn single_symbol() {
        for bound in [HeightBound::Bounded(0), HeightBound::Unbounded] {
            for modified in [false, true] {
                assert_eq!(optimal_bruteforce(&Text::from("a"), bound, modified).unwrap().size(), 1);
            }
        }
    }

    #[test]
    fn over_budget() {
        let t = Text::new(vec![b'a'; 17]);
        assert!(optimal_bruteforce(&t, HeightBound::Unbounded, false).is_err());
    }

    #[test]
    fn adversary_optimum() {
        // a|b|a|b|c|bab|bab beats the 8-phrase shape a|b|ab|c|b|a|b|bab.
        let t = Text::from("ababcbabbab");
        let e = optimal_bruteforce(&t, HeightBound::Bounded(1), false).unwrap();
        assert_eq!(e.size(), 7);
        assert_eq!(decode(&e), t);
        assert!(compute_heights(&e).max_height <= 1);
        let t = Text::from("ababcbabbabbab");
        assert_eq!(optimal_bruteforce(&t, HeightBound::Bounded(1), false).unwrap().size(), 8);
    }

    #[test]
    fn modified_optimum_beats_greedy_example() {
        let t = Text::from("abaxabcdababca");
        let e = optimal_bruteforce(&t, HeightBound::Unbounded, true).unwrap();
        assert_eq!(e.size(), 9);
        assert_eq!(decode(&e), t);
    }

    #[test]
    fn height_zero_standard_is_all_literals() {
        let t = Text::from("abab");
        assert_eq!(optimal_bruteforce(&t, HeightBound::Bounded(0), false).unwrap().size(), 4);
        let t = Text::from("aaaa");
        let e = optimal_bruteforce(&t, HeightBound::Bounded(0), true).unwrap();
        assert_eq!(e.phrases(), &[Phrase::Run { len: 4, sym: b'a' }]);
    }
}
