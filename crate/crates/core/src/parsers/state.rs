use crate::encoding::{HeightBound, Phrase};

/// Heights of the parsed prefix plus the saturation index used by the
/// height checks.
///
/// `next_saturated[i]` is the first position `j >= i` with height equal to
/// the bound. It is filled lazily: entries exist only up to the last
/// saturated position, and everything after it is implicitly infinite.
pub(crate) struct HeightState {
    heights: Vec<u32>,
    limit: Option<u32>,
    next_saturated: Vec<u32>,
}

impl HeightState {
    pub(crate) fn new(n: usize, bound: HeightBound) -> Self {
        HeightState {
            heights: Vec::with_capacity(n),
            limit: bound.limit(),
            next_saturated: Vec::new(),
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.heights.len()
    }

    /// Appends the next position's height; returns true when it is saturated.
    #[inline]
    pub(crate) fn push(&mut self, h: u32) -> bool {
        let pos = self.heights.len();
        self.heights.push(h);
        if self.limit == Some(h) {
            self.next_saturated.resize(pos + 1, pos as u32);
            true
        } else {
            false
        }
    }

    /// Below the bound, i.e. referenceable.
    #[inline]
    pub(crate) fn below_bound(&self, i: usize) -> bool {
        self.limit.is_none_or(|h| self.heights[i] < h)
    }

    /// True when no position in `[from, to)` is saturated. O(1).
    #[inline]
    pub(crate) fn clear(&self, from: usize, to: usize) -> bool {
        self.next_saturated.get(from).is_none_or(|&j| j as usize >= to)
    }

    /// First position after the last saturated one (0 if none).
    pub(crate) fn barrier(&self) -> usize {
        self.next_saturated.len()
    }

    /// Assigns heights for `phrase` starting at the current end. `on_position`
    /// receives each position with its saturation flag.
    pub(crate) fn push_phrase(&mut self, phrase: &Phrase, mut on_position: impl FnMut(usize, bool)) {
        let b = self.heights.len();
        for i in b..b + phrase.len() {
            let h = match phrase.reference0(b, i) {
                None => 0,
                Some(r) => self.heights[r] + 1,
            };
            let saturated = self.push(h);
            on_position(i, saturated);
        }
    }
}
