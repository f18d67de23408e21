use std::fmt;
use std::ops::Deref;

/// An uncompressed byte string.
///
/// Public APIs that take or return positions use 1-based positions; the
/// underlying slice (reachable through `Deref`) is 0-based as usual.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Text(Vec<u8>);

impl Text {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Text(bytes.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Symbol at 1-based position `i`.
    ///
    /// Panics when `i` is outside `[1, n]`.
    pub fn at(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.0.len(), "position {i} outside [1, {}]", self.0.len());
        self.0[i - 1]
    }

    /// Number of distinct symbols.
    pub fn sigma(&self) -> usize {
        let mut seen = [false; 256];
        for &c in &self.0 {
            seen[c as usize] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// The prefix of length `len` (clamped to the text length).
    pub fn prefix(&self, len: usize) -> Text {
        Text(self.0[..len.min(self.0.len())].to_vec())
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl AsRef<[u8]> for Text {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl From<Vec<u8>> for Text {
    fn from(v: Vec<u8>) -> Self {
        Text(v)
    }
}

impl From<&[u8]> for Text {
    fn from(v: &[u8]) -> Self {
        Text(v.to_vec())
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text(s.as_bytes().to_vec())
    }
}

impl fmt::Debug for Text {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Text({:?})", String::from_utf8_lossy(&self.0))
    }
}
