use super::suffix_tree::{Cursor, SuffixTree};

/// Appendable index over a masked text.
///
/// Masked positions behave as unique sentinels: they match no query symbol
/// and no other sentinel, so prefix queries only report occurrences made
/// entirely of unmasked positions.
pub struct OnlineIndex {
    tree: SuffixTree,
}

impl Default for OnlineIndex {
    fn default() -> Self {
        Self::with_capacity(0)
    }
}

impl OnlineIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        OnlineIndex {
            tree: SuffixTree::with_capacity(n),
        }
    }

    pub fn len(&self) -> usize {
        self.tree.text_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn append(&mut self, symbol: u8, masked: bool) {
        if masked {
            self.tree.push_barrier();
        } else {
            self.tree.push(symbol as u32);
        }
    }

    /// Longest prefix of `query` occurring in the indexed text without
    /// touching a masked position, with the 1-based leftmost start of such an
    /// occurrence (`None` iff the length is 0).
    pub fn prefix_query(&self, query: &[u8]) -> (usize, Option<usize>) {
        let (len, start) = self.prefix_query0(query);
        (len, start.map(|s| s + 1))
    }

    pub(crate) fn prefix_query0(&self, query: &[u8]) -> (usize, Option<usize>) {
        let mut cur = self.tree.cursor();
        for &c in query {
            if !cur.advance(&self.tree, c as u32) {
                break;
            }
        }
        (cur.depth(), cur.leftmost(&self.tree))
    }

    pub(crate) fn cursor(&self) -> Cursor {
        self.tree.cursor()
    }

    pub(crate) fn advance(&self, cursor: &mut Cursor, symbol: u8) -> bool {
        cursor.advance(&self.tree, symbol as u32)
    }

    pub(crate) fn leftmost(&self, cursor: &Cursor) -> Option<usize> {
        cursor.leftmost(&self.tree)
    }
}
