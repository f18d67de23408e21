//! Quadratic reference implementations used as test oracles.

/// `lpf` at 0-based position `i` by direct comparison against every earlier start.
pub fn lpf(text: &[u8], i: usize) -> usize {
    (0..i)
        .map(|j| {
            let mut l = 0;
            while i + l < text.len() && text[j + l] == text[i + l] {
                l += 1;
            }
            l
        })
        .max()
        .unwrap_or(0)
}

/// 0-based leftmost `j < i` with `text[j..j+len) == text[i..i+len)`.
pub fn lmocc(text: &[u8], i: usize, len: usize) -> Option<usize> {
    (0..i).find(|&j| text[j..j + len] == text[i..i + len])
}

/// Prefix query against a masked text (`None` entries are sentinels),
/// returning the length and 0-based leftmost start.
pub fn masked_prefix_query(masked: &[Option<u8>], query: &[u8]) -> (usize, Option<usize>) {
    let mut best = (0, None);
    for start in 0..masked.len() {
        let mut l = 0;
        while l < query.len() && start + l < masked.len() && masked[start + l] == Some(query[l]) {
            l += 1;
        }
        if l > best.0 {
            best = (l, Some(start));
        }
    }
    best
}
