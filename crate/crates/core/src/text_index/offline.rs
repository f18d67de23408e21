use crate::error::IndexError;
use crate::text::Text;

use super::suffix_tree::{Cursor, SuffixTree, NIL, ROOT, TERMINATOR};

/// Static index over a whole text answering `lpf` and `lmocc`.
///
/// Built from a suffix tree of `text` followed by a unique terminator.
/// Longest previous factors and their leftmost sources are tabulated for
/// every position in one pass over the nodes: for a position `f`, the
/// topmost node whose leftmost occurrence is `f` hangs below the deepest node
/// that also occurs earlier, and that node's depth and leftmost start are
/// `lpf(f)` and `lmocc(f, lpf(f))`.
pub struct OfflineIndex {
    text: Text,
    tree: SuffixTree,
    lpf: Vec<u32>,
    lpf_source: Vec<u32>,
}

impl OfflineIndex {
    pub fn build(text: &Text) -> Self {
        let n = text.len();
        let mut tree = SuffixTree::with_capacity(n + 1);
        for &c in text.iter() {
            tree.push(c as u32);
        }
        tree.push(TERMINATOR);

        let mut lpf = vec![0u32; n];
        let mut lpf_source = vec![NIL; n];
        for v in 1..tree.node_count() as u32 {
            let f = tree.first(v);
            if f >= n {
                continue;
            }
            let p = tree.parent(v);
            if p != ROOT && tree.first(p) != f {
                let d = tree.internal_depth(p).expect("parent is internal");
                lpf[f] = d as u32;
                lpf_source[f] = tree.first(p) as u32;
            }
        }

        OfflineIndex {
            text: text.clone(),
            tree,
            lpf,
            lpf_source,
        }
    }

    pub fn text(&self) -> &Text {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Longest previous factor at 1-based position `i`.
    pub fn lpf(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.len(), "position {i} outside [1, {}]", self.len());
        self.lpf[i - 1] as usize
    }

    /// Leftmost `j < i` with `text[j..j+len) == text[i..i+len)`, 1-based.
    /// The occurrence at `j` may overlap `[i, i+len)`.
    pub fn lmocc(&self, i: usize, len: usize) -> Result<Option<usize>, IndexError> {
        let n = self.len();
        if i == 0 || len == 0 || i + len - 1 > n {
            return Err(IndexError::OutOfRange { i, len, n });
        }
        Ok(self.lmocc0(i - 1, len).map(|j| j + 1))
    }

    /// `lmocc(i, lpf(i))` in constant time, 1-based.
    pub fn lpf_source(&self, i: usize) -> Option<usize> {
        assert!(i >= 1 && i <= self.len(), "position {i} outside [1, {}]", self.len());
        self.lpf_source0(i - 1).map(|j| j + 1)
    }

    pub(crate) fn lpf0(&self, i: usize) -> usize {
        self.lpf[i] as usize
    }

    pub(crate) fn lpf_source0(&self, i: usize) -> Option<usize> {
        match self.lpf_source[i] {
            NIL => None,
            j => Some(j as usize),
        }
    }

    /// 0-based `lmocc`; costs one step per branching node on the path.
    pub(crate) fn lmocc0(&self, i: usize, len: usize) -> Option<usize> {
        let path: Vec<u32> = self.text[i..i + len].iter().map(|&c| c as u32).collect();
        let mut cur = self.tree.cursor();
        cur.skip(&self.tree, &path, len);
        cur.leftmost(&self.tree).filter(|&j| j < i)
    }

    pub(crate) fn tree(&self) -> &SuffixTree {
        &self.tree
    }

    pub(crate) fn cursor(&self) -> Cursor {
        self.tree.cursor()
    }
}
