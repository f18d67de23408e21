//! Size/height trade-off experiments over a corpus, emitted as CSV.
//!
//! Every encoding is verified against its input before a row is produced;
//! encodings that fail verification are reported separately and never
//! appear as rows.

use std::fmt;
use std::io;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::encoding::{compute_heights, verify, Encoding, HeightBound, Variant, VerifyReport};
use crate::parsers::{parse_indexed, parse_lz77_with};
use crate::text::Text;
use crate::text_index::OfflineIndex;

pub const SWEEP_HEADER: [&str; 11] = [
    "file",
    "sha256",
    "variant",
    "h",
    "n",
    "z_lz77",
    "z_variant",
    "ratio",
    "max_height",
    "mean_height",
    "parse_ms",
];

pub const CURVE_HEADER: [&str; 5] = ["file", "variant", "prefix_len", "target_ratio", "h_min"];

/// `{0, 1, 2, 4, ..., 256, inf}`.
pub fn default_height_grid() -> Vec<HeightBound> {
    (0..=9)
        .map(|e| if e == 0 { 0 } else { 1u32 << (e - 1) })
        .map(HeightBound::Bounded)
        .chain([HeightBound::Unbounded])
        .collect()
}

/// Powers of two below `n`, then `n` itself.
pub fn default_prefix_grid(n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = std::iter::successors(Some(1usize), |p| p.checked_mul(2))
        .take_while(|&p| p < n)
        .collect();
    if n > 0 {
        out.push(n);
    }
    out
}

/// One input file with its provenance.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub sha256: String,
    pub text: Text,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, text: Text) -> Self {
        CorpusEntry {
            name: name.into(),
            sha256: sha256_hex(text.as_bytes()),
            text,
        }
    }
}

#[derive(Debug, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// One message per path that could not be read.
    pub warnings: Vec<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Loads every readable path. Unreadable paths become warnings.
pub fn ingest_corpus<P: AsRef<Path>>(paths: &[P]) -> Corpus {
    let mut corpus = Corpus::default();
    for path in paths {
        let path = path.as_ref();
        match std::fs::read(path) {
            Ok(bytes) => {
                let name = path
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.display().to_string());
                corpus.entries.push(CorpusEntry::new(name, Text::new(bytes)));
            }
            Err(e) => corpus.warnings.push(format!("{}: {e}", path.display())),
        }
    }
    corpus
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub file: String,
    pub sha256: String,
    pub variant: Variant,
    pub h: HeightBound,
    pub n: usize,
    pub z_lz77: usize,
    pub z_variant: usize,
    pub ratio: f64,
    pub max_height: u32,
    pub mean_height: f64,
    pub parse_ms: f64,
}

/// An encoding that did not verify; no row was emitted for it.
#[derive(Debug, Clone)]
pub struct VerificationFailure {
    pub file: String,
    pub variant: Variant,
    pub h: HeightBound,
    pub prefix_len: usize,
    pub report: VerifyReport,
}

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} h={} prefix={} failed verification: {:?}",
            self.file, self.variant, self.h, self.prefix_len, self.report
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    pub failures: Vec<VerificationFailure>,
}

struct Cell {
    encoding: Encoding,
    millis: f64,
}

fn timed(f: impl FnOnce() -> Encoding) -> Cell {
    let t = Instant::now();
    let encoding = f();
    Cell {
        encoding,
        millis: t.elapsed().as_secs_f64() * 1e3,
    }
}

/// LZ77 baseline row followed by one row per `(variant, h)`, in input order.
///
/// Cells run in parallel on the global rayon pool. LZ77 in `variants` is
/// covered by the baseline row and skipped.
pub fn sweep(entry: &CorpusEntry, variants: &[Variant], heights: &[HeightBound]) -> SweepOutcome {
    let text = &entry.text;
    let t = Instant::now();
    let index = OfflineIndex::build(text);
    let index_ms = t.elapsed().as_secs_f64() * 1e3;
    let mut baseline = timed(|| parse_lz77_with(&index));
    baseline.millis += index_ms;
    let z_lz77 = baseline.encoding.size();

    let mut cells: Vec<(Variant, HeightBound)> = vec![(Variant::Lz77, HeightBound::Unbounded)];
    for &v in variants.iter().filter(|&&v| v != Variant::Lz77) {
        cells.extend(heights.iter().map(|&h| (v, h)));
    }

    let results: Vec<(Variant, HeightBound, Cell)> = cells
        .par_iter()
        .enumerate()
        .map(|(k, &(v, h))| {
            if k == 0 {
                return (v, h, Cell { encoding: baseline.encoding.clone(), millis: baseline.millis });
            }
            let needs_index = matches!(v, Variant::Lzhb1 | Variant::Lzhb2);
            let mut cell = timed(|| parse_indexed(&index, v, h));
            if needs_index {
                cell.millis += index_ms;
            }
            (v, h, cell)
        })
        .collect();

    let mut outcome = SweepOutcome::default();
    for (variant, h, cell) in results {
        let report = verify(&cell.encoding, text.as_bytes(), h);
        if !report.passed() {
            outcome.failures.push(VerificationFailure {
                file: entry.name.clone(),
                variant,
                h,
                prefix_len: text.len(),
                report,
            });
            continue;
        }
        let profile = compute_heights(&cell.encoding);
        let z = cell.encoding.size();
        outcome.rows.push(SweepRow {
            file: entry.name.clone(),
            sha256: entry.sha256.clone(),
            variant,
            h,
            n: text.len(),
            z_lz77,
            z_variant: z,
            ratio: ratio(z, z_lz77),
            max_height: profile.max_height,
            mean_height: profile.mean(),
            parse_ms: cell.millis,
        });
    }
    outcome
}

fn ratio(z: usize, z_lz77: usize) -> f64 {
    if z_lz77 == 0 {
        1.0
    } else {
        z as f64 / z_lz77 as f64
    }
}

/// Writes the sweep CSV. With `timing` off, `parse_ms` is written as 0 so the
/// output is byte-identical across runs.
pub fn write_sweep_csv<W: io::Write>(out: W, rows: &[SweepRow], timing: bool) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        let parse_ms = if timing { format!("{:.3}", r.parse_ms) } else { "0".to_owned() };
        w.write_record([
            r.file.clone(),
            r.sha256.clone(),
            r.variant.to_string(),
            r.h.to_string(),
            r.n.to_string(),
            r.z_lz77.to_string(),
            r.z_variant.to_string(),
            format!("{:.6}", r.ratio),
            r.max_height.to_string(),
            format!("{:.6}", r.mean_height),
            parse_ms,
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Smallest swept height meeting a target ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinHeight {
    Height(HeightBound),
    NotAchieved,
}

impl fmt::Display for MinHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinHeight::Height(h) => h.fmt(f),
            MinHeight::NotAchieved => f.write_str("NotAchieved"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RatioCurveRow {
    pub file: String,
    pub variant: Variant,
    pub prefix_len: usize,
    pub target_ratio: f64,
    pub h_min: MinHeight,
}

#[derive(Debug, Clone, Default)]
pub struct CurveOutcome {
    pub rows: Vec<RatioCurveRow>,
    pub failures: Vec<VerificationFailure>,
}

/// For each prefix length and target ratio `r`, the first height of the grid
/// (scanned in increasing order) whose encoding of the prefix has size at
/// most `r` times the LZ77 size of that prefix.
///
/// Prefix lengths beyond the text are clamped to its length. Heights whose
/// encoding fails verification never qualify.
pub fn min_height_for_ratio(
    entry: &CorpusEntry,
    variant: Variant,
    ratios: &[f64],
    prefix_lengths: &[usize],
    height_grid: &[HeightBound],
) -> CurveOutcome {
    let mut grid = height_grid.to_vec();
    grid.sort_unstable();
    grid.dedup();

    let per_prefix: Vec<(Vec<RatioCurveRow>, Vec<VerificationFailure>)> = prefix_lengths
        .par_iter()
        .map(|&len| {
            let prefix = entry.text.prefix(len.min(entry.text.len()));
            let index = OfflineIndex::build(&prefix);
            let z = parse_lz77_with(&index).size() as f64;
            // Sizes are computed lazily: the scan stops once every ratio is met.
            let mut sizes: Vec<Option<usize>> = Vec::with_capacity(grid.len());
            let mut failures = Vec::new();
            let mut size_at = |k: usize, failures: &mut Vec<VerificationFailure>| -> Option<usize> {
                while sizes.len() <= k {
                    let h = grid[sizes.len()];
                    let e = parse_indexed(&index, variant, h);
                    let report = verify(&e, prefix.as_bytes(), h);
                    if report.passed() {
                        sizes.push(Some(e.size()));
                    } else {
                        failures.push(VerificationFailure {
                            file: entry.name.clone(),
                            variant,
                            h,
                            prefix_len: prefix.len(),
                            report,
                        });
                        sizes.push(None);
                    }
                }
                sizes[k]
            };
            let rows = ratios
                .iter()
                .map(|&r| {
                    let h_min = (0..grid.len())
                        .find(|&k| size_at(k, &mut failures).is_some_and(|zv| zv as f64 <= r * z))
                        .map_or(MinHeight::NotAchieved, |k| MinHeight::Height(grid[k]));
                    RatioCurveRow {
                        file: entry.name.clone(),
                        variant,
                        prefix_len: prefix.len(),
                        target_ratio: r,
                        h_min,
                    }
                })
                .collect();
            (rows, failures)
        })
        .collect();

    let mut outcome = CurveOutcome::default();
    for (rows, failures) in per_prefix {
        outcome.rows.extend(rows);
        outcome.failures.extend(failures);
    }
    outcome
}

pub fn write_curve_csv<W: io::Write>(out: W, rows: &[RatioCurveRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CURVE_HEADER)?;
    for r in rows {
        w.write_record([
            r.file.clone(),
            r.variant.to_string(),
            r.prefix_len.to_string(),
            r.target_ratio.to_string(),
            r.h_min.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
