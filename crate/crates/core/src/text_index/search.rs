fn failure_function(pattern: &[u8]) -> Vec<usize> {
    let mut f = vec![0usize; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = f[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        f[i] = k;
    }
    f
}

/// Leftmost start in `[window_start, window_end)` (0-based) of an occurrence
/// of `text[pattern_start..pattern_start+pattern_len)` lying inside `text`.
pub fn window_leftmost_occurrence0(
    text: &[u8],
    pattern_start: usize,
    pattern_len: usize,
    window_start: usize,
    window_end: usize,
) -> Option<usize> {
    let pattern = &text[pattern_start..pattern_start + pattern_len];
    if pattern.is_empty() {
        return (window_start < window_end && window_start <= text.len()).then_some(window_start);
    }
    let scan_end = (window_end + pattern_len - 1).min(text.len());
    if window_start >= window_end || window_start + pattern_len > scan_end {
        return None;
    }
    let fail = failure_function(pattern);
    let mut k = 0;
    for (i, &c) in text.iter().enumerate().take(scan_end).skip(window_start) {
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == pattern_len {
            return Some(i + 1 - pattern_len);
        }
    }
    None
}

/// 1-based [`window_leftmost_occurrence0`].
pub fn window_leftmost_occurrence(
    text: &[u8],
    pattern_start: usize,
    pattern_len: usize,
    window_start: usize,
    window_end: usize,
) -> Option<usize> {
    assert!(pattern_start >= 1 && window_start >= 1, "positions are 1-based");
    window_leftmost_occurrence0(text, pattern_start - 1, pattern_len, window_start - 1, window_end - 1)
        .map(|k| k + 1)
}
