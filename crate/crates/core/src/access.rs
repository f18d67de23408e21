//! Random access into an encoding without decompressing it.
//!
//! A position is resolved by following references until a literal or run
//! phrase is reached. Each step finds the enclosing phrase by binary search
//! over the phrase starts, so a query costs `O((height + 1) log z)`.

use std::collections::BTreeMap;

use crate::encoding::{compute_heights, Encoding, HeightBound, Phrase};
use crate::error::AccessError;

/// Phrase starts and payloads of one encoding. Holds `O(z)` entries.
#[derive(Debug, Clone)]
pub struct RandomAccessIndex {
    /// 0-based phrase starts, strictly increasing.
    starts: Vec<usize>,
    phrases: Vec<Phrase>,
    n: usize,
    bound: HeightBound,
}

impl RandomAccessIndex {
    pub fn build(encoding: &Encoding) -> Self {
        let mut starts = Vec::with_capacity(encoding.size());
        let mut b = 0;
        for ph in encoding.phrases() {
            starts.push(b);
            b += ph.len();
        }
        RandomAccessIndex {
            starts,
            phrases: encoding.phrases().to_vec(),
            n: encoding.len(),
            bound: encoding.bound(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Declared height bound of the indexed encoding.
    pub fn bound(&self) -> HeightBound {
        self.bound
    }

    /// 1-based phrase starts.
    pub fn starts(&self) -> Vec<usize> {
        self.starts.iter().map(|b| b + 1).collect()
    }

    /// Index of the phrase containing 0-based position `i`.
    #[inline]
    fn phrase_of(&self, i: usize) -> usize {
        self.starts.partition_point(|&b| b <= i) - 1
    }

    /// Symbol at 1-based position `i` and the number of reference steps
    /// taken, which equals the height of `i`.
    pub fn access(&self, i: usize) -> Result<(u8, u32), AccessError> {
        if i == 0 || i > self.n {
            return Err(AccessError::Position { i, n: self.n });
        }
        Ok(self.access0(i - 1))
    }

    fn access0(&self, mut i: usize) -> (u8, u32) {
        let mut steps = 0;
        loop {
            let j = self.phrase_of(i);
            let ph = &self.phrases[j];
            match *ph {
                Phrase::Literal(c) => return (c, steps),
                Phrase::Run { sym, .. } => return (sym, steps),
                _ => {
                    i = ph.reference0(self.starts[j], i).expect("copy phrases reference");
                    steps += 1;
                }
            }
        }
    }

    /// Symbols at 1-based positions `[i, i + len)`. An empty range may start
    /// at `n + 1`.
    pub fn extract(&self, i: usize, len: usize) -> Result<Vec<u8>, AccessError> {
        if i == 0 || i - 1 + len > self.n {
            return Err(AccessError::Range { i, len, n: self.n });
        }
        Ok((i - 1..i - 1 + len).map(|p| self.access0(p).0).collect())
    }
}

/// Summary of the height distribution of an encoding.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightStats {
    pub max: u32,
    pub mean: f64,
    /// Number of positions per height value.
    pub histogram: BTreeMap<u32, usize>,
}

pub fn height_stats(encoding: &Encoding) -> HeightStats {
    let profile = compute_heights(encoding);
    let mut histogram = BTreeMap::new();
    for &h in &profile.heights {
        *histogram.entry(h).or_insert(0) += 1;
    }
    HeightStats {
        max: profile.max_height,
        mean: profile.mean(),
        histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::tests::{worked_modified, worked_standard};
    use crate::encoding::{decode, Variant};

    #[test]
    fn starts_of_worked_examples() {
        assert_eq!(RandomAccessIndex::build(&worked_standard()).starts(), [1, 2, 3, 6, 7]);
        assert_eq!(RandomAccessIndex::build(&worked_modified()).starts(), [1, 3, 4, 7, 8]);
        let single = Encoding::new(Variant::Lz77, HeightBound::Unbounded, vec![Phrase::Literal(b'x')]).unwrap();
        assert_eq!(RandomAccessIndex::build(&single).starts(), [1]);
    }

    #[test]
    fn access_follows_reference_chain() {
        let idx = RandomAccessIndex::build(&worked_standard());
        assert_eq!(idx.access(9).unwrap(), (b'b', 2));
        assert_eq!(idx.access(1).unwrap(), (b'a', 0));
        let idx = RandomAccessIndex::build(&worked_modified());
        assert_eq!(idx.access(10).unwrap(), (b'b', 1));
    }

    #[test]
    fn access_matches_decode_and_heights() {
        for e in [worked_standard(), worked_modified()] {
            let idx = RandomAccessIndex::build(&e);
            let text = decode(&e);
            let heights = compute_heights(&e);
            for i in 1..=e.len() {
                assert_eq!(idx.access(i).unwrap(), (text.at(i), heights.at(i)));
            }
        }
    }

    #[test]
    fn out_of_range() {
        let idx = RandomAccessIndex::build(&worked_standard());
        assert_eq!(idx.access(0), Err(AccessError::Position { i: 0, n: 11 }));
        assert!(idx.access(12).is_err());
        assert!(idx.extract(11, 2).is_err());
        assert!(idx.extract(0, 0).is_err());
    }

    #[test]
    fn extract_ranges() {
        let e = worked_standard();
        let idx = RandomAccessIndex::build(&e);
        assert_eq!(idx.extract(1, 11).unwrap(), decode(&e).as_bytes());
        assert_eq!(idx.extract(7, 5).unwrap(), b"babac");
        assert_eq!(idx.extract(4, 0).unwrap(), b"");
        assert_eq!(idx.extract(12, 0).unwrap(), b"");
    }

    #[test]
    fn stats_of_modified_example() {
        let s = height_stats(&worked_modified());
        assert_eq!(s.max, 2);
        assert_eq!(s.histogram, BTreeMap::from([(0, 4), (1, 5), (2, 2)]));
    }
}
