//! Strings with known parsing behaviour.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::GenerateError;
use crate::text::Text;

/// Upper bound on `k` for [`gen_tall_lz77_string`]; each block consumes two
/// fresh byte values.
pub const TALL_MAX_BLOCKS: usize = 120;

const SEPARATOR: u8 = b'#';
const PIVOT: u8 = b'b';

/// Fresh symbols `c_0, c_1, ...`: `a`, then `c..z`, `A..Z`, `0..9`, then the
/// remaining byte values. Never yields the pivot or the separator.
fn fresh_symbols() -> impl Iterator<Item = u8> {
    let preferred: Vec<u8> = std::iter::once(b'a')
        .chain(b'c'..=b'z')
        .chain(b'A'..=b'Z')
        .chain(b'0'..=b'9')
        .collect();
    let rest: Vec<u8> = (0..=255u8)
        .filter(|c| !preferred.contains(c) && *c != PIVOT && *c != SEPARATOR)
        .collect();
    preferred.into_iter().chain(rest)
}

/// `ab` followed by `k` blocks `c_{2m} b c_{2m+1} c_{2m+2} b c_{2m+1}`
/// separated by `#`: `ababcdbc#dbefbe#fbghbg#...`.
///
/// Under greedy LZ77 every `b` copies from the closest earlier `b`, so the
/// height of the last `b` grows linearly with `k`.
pub fn gen_tall_lz77_string(k: usize) -> Result<Text, GenerateError> {
    if k > TALL_MAX_BLOCKS {
        return Err(GenerateError::OverBudget {
            k,
            max: TALL_MAX_BLOCKS,
        });
    }
    let c: Vec<u8> = fresh_symbols().take(2 * k + 1).collect();
    let mut out = vec![b'a', PIVOT];
    for m in 0..k {
        if m > 0 {
            out.push(SEPARATOR);
        }
        out.extend_from_slice(&[c[2 * m], PIVOT, c[2 * m + 1], c[2 * m + 2], PIVOT, c[2 * m + 1]]);
    }
    Ok(Text::new(out))
}

/// `ababc` followed by `k` copies of `bab`: greedy height-bounded parsers are
/// far from optimal on it at height 1.
pub fn gen_greedy_adversary(k: usize) -> Text {
    let mut out = b"ababc".to_vec();
    for _ in 0..k {
        out.extend_from_slice(b"bab");
    }
    Text::new(out)
}

/// Alphabet of [`gen_versioned`]: lowercase letters and a space.
const VERSIONED_ALPHABET: &[u8] = b"abcdefghijklmnopqrstuvwxyz ";

/// A random seed of `seed_len` symbols followed by `versions - 1` revisions,
/// each equal to the previous one with `mutations` random substitutions.
/// The total length is `seed_len * versions`. Deterministic in `rng_seed`.
pub fn gen_versioned(seed_len: usize, versions: usize, mutations: usize, rng_seed: u64) -> Text {
    let mut rng = StdRng::seed_from_u64(rng_seed);
    let symbol = |rng: &mut StdRng| VERSIONED_ALPHABET[rng.random_range(0..VERSIONED_ALPHABET.len())];
    let mut current: Vec<u8> = (0..seed_len).map(|_| symbol(&mut rng)).collect();
    let mut out = Vec::with_capacity(seed_len * versions);
    for v in 0..versions {
        if v > 0 && seed_len > 0 {
            for _ in 0..mutations {
                let i = rng.random_range(0..seed_len);
                current[i] = symbol(&mut rng);
            }
        }
        out.extend_from_slice(&current);
    }
    Text::new(out)
}
