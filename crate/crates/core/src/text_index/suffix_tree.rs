//! Online suffix tree (Ukkonen) over `u32` symbols.
//!
//! Every node records `first`, the leftmost start of its path label. Leaves
//! get the start of their suffix; a node created by splitting an edge
//! inherits `first` from the child it splits off, because every leaf added
//! later starts further right.
//!
//! Symbols below [`MAX_KEYED_SYMBOL`] are ordinary and are stored in the child
//! map. [`SuffixTree::push_barrier`] appends a symbol unique to its position.
//! Edges that start with a barrier are never keyed, so no walk can enter
//! them, and the tree behaves as a generalized suffix tree of the segments
//! between barriers.

use rustc_hash::FxHashMap;

pub(crate) const ROOT: u32 = 0;
pub(crate) const NIL: u32 = u32::MAX;
const OPEN: u32 = u32::MAX;

/// Keyed symbols are `0..MAX_KEYED_SYMBOL`: the 256 byte values plus one
/// terminator.
pub(crate) const MAX_KEYED_SYMBOL: u32 = 257;
pub(crate) const TERMINATOR: u32 = 256;
/// Barrier symbols are `BARRIER_BASE + position`, unique per position.
pub(crate) const BARRIER_BASE: u32 = 512;

#[inline]
fn key(node: u32, sym: u32) -> u64 {
    debug_assert!(sym < MAX_KEYED_SYMBOL);
    ((node as u64) << 9) | sym as u64
}

pub(crate) struct SuffixTree {
    text: Vec<u32>,
    start: Vec<u32>,
    end: Vec<u32>,
    link: Vec<u32>,
    first: Vec<u32>,
    parent: Vec<u32>,
    /// String depth of internal nodes. Leaves store `OPEN`.
    depth: Vec<u32>,
    children: FxHashMap<u64, u32>,
    active_node: u32,
    active_edge: usize,
    active_len: usize,
    remainder: usize,
}

impl SuffixTree {
    pub(crate) fn with_capacity(n: usize) -> Self {
        let nodes = 2 * n + 2;
        let mut tree = SuffixTree {
            text: Vec::with_capacity(n + 1),
            start: Vec::with_capacity(nodes),
            end: Vec::with_capacity(nodes),
            link: Vec::with_capacity(nodes),
            first: Vec::with_capacity(nodes),
            parent: Vec::with_capacity(nodes),
            depth: Vec::with_capacity(nodes),
            children: FxHashMap::default(),
            active_node: ROOT,
            active_edge: 0,
            active_len: 0,
            remainder: 0,
        };
        tree.children.reserve(nodes);
        tree.new_node(0, 0, 0, NIL, 0);
        tree
    }

    pub(crate) fn text_len(&self) -> usize {
        self.text.len()
    }

    pub(crate) fn node_count(&self) -> usize {
        self.start.len()
    }

    fn new_node(&mut self, start: u32, end: u32, first: u32, parent: u32, depth: u32) -> u32 {
        let id = self.start.len() as u32;
        self.start.push(start);
        self.end.push(end);
        self.link.push(ROOT);
        self.first.push(first);
        self.parent.push(parent);
        self.depth.push(depth);
        id
    }

    #[inline]
    pub(crate) fn edge_len(&self, node: u32) -> usize {
        let end = match self.end[node as usize] {
            OPEN => self.text.len() as u32,
            e => e,
        };
        (end - self.start[node as usize]) as usize
    }

    #[inline]
    pub(crate) fn edge_start(&self, node: u32) -> usize {
        self.start[node as usize] as usize
    }

    #[inline]
    pub(crate) fn child(&self, node: u32, sym: u32) -> Option<u32> {
        if sym >= MAX_KEYED_SYMBOL {
            return None;
        }
        self.children.get(&key(node, sym)).copied()
    }

    #[inline]
    pub(crate) fn first(&self, node: u32) -> usize {
        self.first[node as usize] as usize
    }

    pub(crate) fn parent(&self, node: u32) -> u32 {
        self.parent[node as usize]
    }

    /// String depth of an internal node (root is 0). `None` for leaves.
    pub(crate) fn internal_depth(&self, node: u32) -> Option<usize> {
        match self.depth[node as usize] {
            OPEN => None,
            d => Some(d as usize),
        }
    }

    /// Appends an ordinary symbol (`sym < MAX_KEYED_SYMBOL`).
    pub(crate) fn push(&mut self, sym: u32) {
        assert!(sym < MAX_KEYED_SYMBOL, "symbol {sym} is not a keyed symbol");
        self.extend(sym);
    }

    /// Appends a symbol that matches nothing, including other barriers.
    pub(crate) fn push_barrier(&mut self) {
        let pos = self.text.len() as u32;
        self.extend(BARRIER_BASE + pos);
        debug_assert_eq!(self.remainder, 0);
    }

    fn link_child(&mut self, node: u32, sym: u32, child: u32) {
        if sym < MAX_KEYED_SYMBOL {
            self.children.insert(key(node, sym), child);
        }
    }

    /// One Ukkonen phase.
    fn extend(&mut self, sym: u32) {
        let pos = self.text.len();
        self.text.push(sym);
        self.remainder += 1;
        let mut pending_link = NIL;

        while self.remainder > 0 {
            if self.active_len == 0 {
                self.active_edge = pos;
            }
            let edge_sym = self.text[self.active_edge];
            match self.child(self.active_node, edge_sym) {
                None => {
                    let suffix_start = (pos + 1 - self.remainder) as u32;
                    let leaf = self.new_node(pos as u32, OPEN, suffix_start, self.active_node, OPEN);
                    self.link_child(self.active_node, sym, leaf);
                    if pending_link != NIL {
                        self.link[pending_link as usize] = self.active_node;
                        pending_link = NIL;
                    }
                }
                Some(next) => {
                    let len = self.edge_len(next);
                    if self.active_len >= len {
                        self.active_edge += len;
                        self.active_len -= len;
                        self.active_node = next;
                        continue;
                    }
                    let split_at = self.start[next as usize] as usize + self.active_len;
                    if self.text[split_at] == sym {
                        if pending_link != NIL && self.active_node != ROOT {
                            self.link[pending_link as usize] = self.active_node;
                        }
                        self.active_len += 1;
                        break;
                    }
                    let depth = self.depth[self.active_node as usize] + self.active_len as u32;
                    let split = self.new_node(
                        self.start[next as usize],
                        split_at as u32,
                        self.first[next as usize],
                        self.active_node,
                        depth,
                    );
                    self.children.insert(key(self.active_node, edge_sym), split);
                    let suffix_start = (pos + 1 - self.remainder) as u32;
                    let leaf = self.new_node(pos as u32, OPEN, suffix_start, split, OPEN);
                    self.link_child(split, sym, leaf);
                    self.start[next as usize] = split_at as u32;
                    self.parent[next as usize] = split;
                    self.link_child(split, self.text[split_at], next);
                    if pending_link != NIL {
                        self.link[pending_link as usize] = split;
                    }
                    pending_link = split;
                }
            }
            self.remainder -= 1;
            if self.active_node == ROOT && self.active_len > 0 {
                self.active_len -= 1;
                self.active_edge = pos + 1 - self.remainder;
            } else if self.active_node != ROOT {
                self.active_node = self.link[self.active_node as usize];
            }
        }
    }

    pub(crate) fn cursor(&self) -> Cursor {
        Cursor {
            node: ROOT,
            into: 0,
            depth: 0,
        }
    }
}

/// A position in the tree reached by walking down from the root.
///
/// `node` is the node whose incoming edge holds the last matched symbol and
/// `into` counts the symbols of that edge matched so far.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Cursor {
    node: u32,
    into: usize,
    depth: usize,
}

impl Cursor {
    pub(crate) fn depth(&self) -> usize {
        self.depth
    }

    /// Extends the matched string by `sym`. Returns false, leaving the cursor
    /// unchanged, when no indexed substring continues that way.
    #[inline]
    pub(crate) fn advance(&mut self, tree: &SuffixTree, sym: u32) -> bool {
        if self.node == ROOT || self.into == tree.edge_len(self.node) {
            match tree.child(self.node, sym) {
                Some(c) => {
                    self.node = c;
                    self.into = 1;
                    self.depth += 1;
                    true
                }
                None => false,
            }
        } else if tree.text[tree.edge_start(self.node) + self.into] == sym {
            self.into += 1;
            self.depth += 1;
            true
        } else {
            false
        }
    }

    /// Moves down by `len` symbols of `path`, which must spell a string
    /// present in the tree. Only node boundaries are inspected.
    pub(crate) fn skip(&mut self, tree: &SuffixTree, path: &[u32], mut len: usize) {
        let mut pos = 0;
        while len > 0 {
            let rest = if self.node == ROOT { 0 } else { tree.edge_len(self.node) - self.into };
            if rest == 0 {
                let c = tree
                    .child(self.node, path[pos])
                    .expect("skip path must exist in the tree");
                self.node = c;
                self.into = 0;
                continue;
            }
            let step = rest.min(len);
            self.into += step;
            self.depth += step;
            pos += step;
            len -= step;
        }
    }

    /// Leftmost start of an occurrence of the matched string, or `None` at
    /// depth zero.
    #[inline]
    pub(crate) fn leftmost(&self, tree: &SuffixTree) -> Option<usize> {
        (self.depth > 0).then(|| tree.first(self.node))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &[u8]) -> SuffixTree {
        let mut t = SuffixTree::with_capacity(s.len());
        for &c in s {
            t.push(c as u32);
        }
        t
    }

    fn query(tree: &SuffixTree, q: &[u8]) -> (usize, Option<usize>) {
        let mut cur = tree.cursor();
        for &c in q {
            if !cur.advance(tree, c as u32) {
                break;
            }
        }
        (cur.depth(), cur.leftmost(tree))
    }

    #[test]
    fn finds_every_substring_with_leftmost_start() {
        let s = b"mississippi";
        let tree = build(s);
        for i in 0..s.len() {
            for j in i + 1..=s.len() {
                let sub = &s[i..j];
                let lm = (0..s.len() - sub.len() + 1).find(|&k| &s[k..k + sub.len()] == sub);
                assert_eq!(query(&tree, sub), (sub.len(), lm), "{:?}", sub);
            }
        }
    }

    #[test]
    fn terminator_makes_all_suffixes_leaves() {
        let s = b"abaababa";
        let mut tree = build(s);
        tree.push(TERMINATOR);
        let leaves = (1..tree.node_count() as u32)
            .filter(|&v| tree.internal_depth(v).is_none())
            .count();
        assert_eq!(leaves, s.len() + 1);
    }

    #[test]
    fn barriers_never_match() {
        let mut tree = SuffixTree::with_capacity(8);
        for &c in b"ab" {
            tree.push(c as u32);
        }
        tree.push_barrier();
        tree.push_barrier();
        for &c in b"ab" {
            tree.push(c as u32);
        }
        assert_eq!(query(&tree, b"abab"), (2, Some(0)));
        assert_eq!(query(&tree, b"b"), (1, Some(1)));
        assert_eq!(query(&tree, b"ba"), (1, Some(1)));
    }

    #[test]
    fn split_before_barrier() {
        let mut tree = SuffixTree::with_capacity(8);
        tree.push(b'a' as u32);
        tree.push_barrier();
        for &c in b"ac" {
            tree.push(c as u32);
        }
        assert_eq!(query(&tree, b"a"), (1, Some(0)));
        assert_eq!(query(&tree, b"ac"), (2, Some(2)));
        assert_eq!(query(&tree, b"c"), (1, Some(3)));
    }
}
