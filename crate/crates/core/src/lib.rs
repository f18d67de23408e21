//! Height-bounded LZ-like parsings.
//!
//! An LZ-like encoding splits a text into literal phrases and copies of
//! earlier substrings. Every copied position points at the position it is
//! decoded from, which induces a referencing forest over the text. The parsers
//! in this crate bound the height of that forest, so any symbol can be
//! recovered from the encoding with at most `h` predecessor steps.
//!
//! The crate is organised as follows:
//!
//! * [`text_index`]: suffix-tree machinery (longest previous factors,
//!   leftmost occurrences, masked online prefix queries, minimum periods).
//! * [`encoding`]: the phrase model, height computation, decoding,
//!   verification and the canonical text format.
//! * [`parsers`]: greedy LZ77 and the four height-bounded variants, an
//!   exhaustive optimal parser for tiny inputs, and string generators.
//! * [`access`]: random access over an encoding without decompressing it.
//! * [`harness`]: size/height sweeps over a corpus, emitted as CSV.

pub mod access;
pub mod encoding;
pub mod error;
pub mod harness;
pub mod parsers;
pub mod text;
pub mod text_index;

pub use access::{height_stats, HeightStats, RandomAccessIndex};
pub use encoding::{
    compute_heights, decode, verify, Encoding, HeightBound, HeightProfile, Phrase, Variant,
    VerifyReport,
};
pub use error::{AccessError, EncodingError, FormatError, GenerateError, IndexError};
pub use parsers::{
    gen_greedy_adversary, gen_tall_lz77_string, optimal_bruteforce, parse, parse_lz77,
    parse_lzhb1, parse_lzhb2, parse_lzhb3, parse_lzhb4,
};
pub use text::Text;
pub use text_index::{MinPeriodTracker, OfflineIndex, OnlineIndex};
