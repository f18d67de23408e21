/// Minimum period of a string that only grows at the end.
///
/// Keeps the border array; the minimum period of `w[..m]` is `m - B[m]`.
#[derive(Debug, Clone, Default)]
pub struct MinPeriodTracker {
    text: Vec<u8>,
    border: Vec<usize>,
}

impl MinPeriodTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Appends `symbol` and returns the minimum period of the tracked string.
    pub fn push(&mut self, symbol: u8) -> usize {
        let m = self.text.len();
        self.text.push(symbol);
        let b = if m == 0 {
            0
        } else {
            let mut b = self.border[m - 1];
            while b > 0 && self.text[b] != symbol {
                b = self.border[b - 1];
            }
            if self.text[b] == symbol {
                b + 1
            } else {
                0
            }
        };
        self.border.push(b);
        m + 1 - b
    }

    /// Minimum period of the tracked string, 0 when empty.
    pub fn period(&self) -> usize {
        match self.border.last() {
            Some(&b) => self.text.len() - b,
            None => 0,
        }
    }
}

/// Minimum period of `w` (0 for the empty string).
pub fn min_period(w: &[u8]) -> usize {
    let mut t = MinPeriodTracker::new();
    let mut p = 0;
    for &c in w {
        p = t.push(c);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_period(w: &[u8]) -> usize {
        (1..=w.len())
            .find(|&p| (0..w.len() - p).all(|i| w[i] == w[i + p]))
            .unwrap_or(0)
    }

    fn periods(s: &[u8]) -> Vec<usize> {
        let mut t = MinPeriodTracker::new();
        s.iter().map(|&c| t.push(c)).collect()
    }

    #[test]
    fn small_sequences() {
        assert_eq!(periods(b"aaa"), vec![1, 1, 1]);
        assert_eq!(periods(b"aba"), vec![1, 2, 2]);
        assert_eq!(periods(b"ababc"), vec![1, 2, 2, 2, 5]);
    }

    proptest! {
        #[test]
        fn matches_brute_force(s in proptest::collection::vec(0u8..3, 0..40)) {
            let ps = periods(&s);
            for m in 1..=s.len() {
                prop_assert_eq!(ps[m - 1], brute_period(&s[..m]));
            }
            prop_assert!(ps.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
