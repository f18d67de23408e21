use crate::text_index::min_period;

use super::{compute_heights, decode, Encoding, HeightBound, Phrase};

/// Outcome of checking an encoding against a text. Phrase indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub decodes_equal: bool,
    /// Phrases whose content differs from what their source supplies in the
    /// expected text.
    pub source_mismatches: Vec<usize>,
    /// Periodic phrases whose stored period is not the minimum period.
    pub period_violations: Vec<usize>,
    pub max_height: u32,
    pub bound: HeightBound,
    pub within_bound: bool,
    pub size: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.decodes_equal && self.source_mismatches.is_empty() && self.period_violations.is_empty() && self.within_bound
    }
}

pub fn verify(encoding: &Encoding, expected: &[u8], bound: HeightBound) -> VerifyReport {
    let decodes_equal = decode(encoding).as_bytes() == expected;
    let heights = compute_heights(encoding);

    let mut source_mismatches = Vec::new();
    let mut period_violations = Vec::new();
    let mut b = 0;
    for (j, ph) in encoding.phrases().iter().enumerate() {
        let len = ph.len();
        let fits = b + len <= expected.len();
        let content_ok = fits
            && match *ph {
                Phrase::Literal(c) => expected[b] == c,
                Phrase::Run { sym, .. } => expected[b..b + len].iter().all(|&x| x == sym),
                Phrase::Copy { .. } | Phrase::Periodic { .. } => (b..b + len).all(|i| {
                    let r = ph.reference0(b, i).expect("copy phrases reference");
                    expected[r] == expected[i]
                }),
            };
        if !content_ok {
            source_mismatches.push(j + 1);
        }
        if let Phrase::Periodic { period, .. } = *ph {
            if !fits || min_period(&expected[b..b + len]) != period {
                period_violations.push(j + 1);
            }
        }
        b += len;
    }

    VerifyReport {
        decodes_equal,
        source_mismatches,
        period_violations,
        max_height: heights.max_height,
        bound,
        within_bound: bound.admits(heights.max_height),
        size: encoding.size(),
    }
}
