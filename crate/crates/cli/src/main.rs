//! `lzhb`: parse, decode, verify, access, generate and sweep.
//!
//! Exit codes: 0 success, 1 verification failure or malformed encoding,
//! 2 usage error, 3 I/O error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lzhb::encoding::{deserialize, serialize};
use lzhb::harness::{
    default_height_grid, default_prefix_grid, ingest_corpus, min_height_for_ratio, sweep, write_curve_csv,
    write_sweep_csv,
};
use lzhb::parsers::gen_versioned;
use lzhb::{
    decode, gen_greedy_adversary, gen_tall_lz77_string, parse, verify, Encoding, HeightBound,
    RandomAccessIndex, Text, Variant,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Parser)]
#[command(name = "lzhb", version, about = "Height-bounded LZ-like compression")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and write its encoding.
    Parse {
        /// Input file, `-` for standard input.
        input: PathBuf,
        #[arg(long, default_value = "lzhb3", value_parser = greedy_variant)]
        variant: Variant,
        /// Height bound: a non-negative integer or `inf`.
        #[arg(long = "h", default_value = "inf", allow_hyphen_values = true)]
        h: HeightBound,
        /// Output file, `-` for standard output.
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Reconstruct the text of an encoding.
    Decode {
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Check an encoding against the original text and a height bound.
    Verify {
        encoding: PathBuf,
        original: PathBuf,
        /// Defaults to the bound declared by the encoding.
        #[arg(long = "h", allow_hyphen_values = true)]
        h: Option<HeightBound>,
    },
    /// Print `pos symbol steps` for positions of an encoded text.
    Access {
        encoding: PathBuf,
        /// 1-based positions and ranges, e.g. `1,5,9-12`. Defaults to all.
        #[arg(long, value_delimiter = ',')]
        positions: Vec<String>,
        /// Sample `--count` random positions with this seed instead.
        #[arg(long, conflicts_with = "positions")]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Write a generated string.
    Gen {
        family: Family,
        /// Family size parameter (number of versions for `versioned`).
        k: usize,
        /// Random seed for `versioned`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Seed length for `versioned`.
        #[arg(long, default_value_t = 100_000)]
        seed_len: usize,
        /// Substitutions per version for `versioned`.
        #[arg(long, default_value_t = 100)]
        mutations: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Size/height sweep over files, as CSV.
    Sweep {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "lzhb1,lzhb2,lzhb3,lzhb4", value_parser = greedy_variant)]
        variant: Vec<Variant>,
        /// Height grid; defaults to 0,1,2,4,...,256,inf.
        #[arg(long, value_delimiter = ',')]
        grid: Vec<HeightBound>,
        /// Write 0 for parse_ms so the output is reproducible byte for byte.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Smallest swept height meeting each target ratio, per prefix, as CSV.
    Curve {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value = "lzhb3", value_parser = greedy_variant)]
        variant: Variant,
        #[arg(long, value_delimiter = ',', default_value = "1.0,1.5,2.0")]
        ratios: Vec<f64>,
        /// Prefix lengths; defaults to powers of two and the file length.
        #[arg(long, value_delimiter = ',')]
        prefixes: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        grid: Vec<HeightBound>,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Adversary,
    Tall,
    Versioned,
}

fn greedy_variant(s: &str) -> Result<Variant, String> {
    let v: Variant = s.parse()?;
    if Variant::GREEDY.contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is not a greedy variant (lz77, lzhb1..lzhb4)"))
    }
}

enum Failure {
    Verification(String),
    Usage(String),
    Io(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (code, msg) = match self {
            Failure::Verification(m) => (1, m),
            Failure::Usage(m) => (2, m),
            Failure::Io(m) => (3, m),
        };
        eprintln!("lzhb: {msg}");
        ExitCode::from(code)
    }
}

type Outcome = Result<(), Failure>;

fn is_stdio(path: &Path) -> bool {
    path.as_os_str() == "-"
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    let res = if is_stdio(path) {
        io::stdin().read_to_end(&mut buf).map(|_| ())
    } else {
        fs::read(path).map(|b| buf = b)
    };
    res.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(buf)
}

fn write_output(path: &Path, bytes: &[u8]) -> Outcome {
    let res = if is_stdio(path) {
        let mut out = io::stdout().lock();
        out.write_all(bytes).and_then(|_| out.flush())
    } else {
        fs::write(path, bytes)
    };
    res.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn read_encoding(path: &Path) -> Result<Encoding, Failure> {
    let bytes = read_input(path)?;
    let s = String::from_utf8(bytes)
        .map_err(|_| Failure::Verification(format!("{}: encoding is not UTF-8", path.display())))?;
    deserialize(&s).map_err(|e| Failure::Verification(format!("{}: {e}", path.display())))
}

fn cmd_parse(input: &Path, variant: Variant, h: HeightBound, out: &Path) -> Outcome {
    let text = Text::new(read_input(input)?);
    let encoding = parse(&text, variant, h);
    let bound = if variant == Variant::Lz77 { HeightBound::Unbounded } else { h };
    let report = verify(&encoding, &text, bound);
    eprintln!("z={}", encoding.size());
    eprintln!("max_height={}", report.max_height);
    eprintln!("n={}", text.len());
    if !report.passed() {
        return Err(Failure::Verification(format!("encoding failed verification: {report:?}")));
    }
    write_output(out, serialize(&encoding).as_bytes())
}

fn cmd_decode(input: &Path, out: &Path) -> Outcome {
    let encoding = read_encoding(input)?;
    write_output(out, decode(&encoding).as_bytes())
}

fn cmd_verify(encoding: &Path, original: &Path, h: Option<HeightBound>) -> Outcome {
    let e = read_encoding(encoding)?;
    let text = read_input(original)?;
    let bound = h.unwrap_or(e.bound());
    let r = verify(&e, &text, bound);
    println!("decodes_equal={}", r.decodes_equal);
    println!("source_mismatches={}", r.source_mismatches.len());
    println!("period_violations={}", r.period_violations.len());
    println!("z={}", r.size);
    println!("max_height={}", r.max_height);
    println!("h={bound}");
    println!("within_bound={}", r.within_bound);
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn parse_positions(specs: &[String], n: usize) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for spec in specs {
        let bad = || Failure::Usage(format!("invalid position {spec:?}"));
        match spec.split_once('-') {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| bad())?;
                let b: usize = b.trim().parse().map_err(|_| bad())?;
                out.extend(a..=b);
            }
            None => out.push(spec.trim().parse().map_err(|_| bad())?),
        }
    }
    if let Some(&i) = out.iter().find(|&&i| i == 0 || i > n) {
        return Err(Failure::Usage(format!("position {i} outside [1, {n}]")));
    }
    Ok(out)
}

fn render_symbol(c: u8) -> String {
    if c.is_ascii_graphic() {
        (c as char).to_string()
    } else {
        format!("\\x{c:02x}")
    }
}

fn cmd_access(encoding: &Path, positions: &[String], seed: Option<u64>, count: usize) -> Outcome {
    let e = read_encoding(encoding)?;
    let n = e.len();
    let idx = RandomAccessIndex::build(&e);
    let positions = match seed {
        Some(seed) if n > 0 => {
            let mut rng = StdRng::seed_from_u64(seed);
            (0..count).map(|_| rng.random_range(1..=n)).collect()
        }
        Some(_) => Vec::new(),
        None if positions.is_empty() => (1..=n).collect(),
        None => parse_positions(positions, n)?,
    };
    let mut out = String::new();
    for i in positions {
        let (c, steps) = idx.access(i).map_err(|e| Failure::Usage(e.to_string()))?;
        out.push_str(&format!("{i} {} {steps}\n", render_symbol(c)));
    }
    write_output(Path::new("-"), out.as_bytes())
}

fn cmd_gen(family: Family, k: usize, seed: u64, seed_len: usize, mutations: usize, out: &Path) -> Outcome {
    let text = match family {
        Family::Adversary => gen_greedy_adversary(k),
        Family::Tall => gen_tall_lz77_string(k).map_err(|e| Failure::Usage(e.to_string()))?,
        Family::Versioned => gen_versioned(seed_len, k, mutations, seed),
    };
    write_output(out, text.as_bytes())
}

fn grid_or_default(grid: &[HeightBound]) -> Vec<HeightBound> {
    if grid.is_empty() {
        default_height_grid()
    } else {
        grid.to_vec()
    }
}

fn load_corpus(files: &[PathBuf]) -> Result<lzhb::harness::Corpus, Failure> {
    let corpus = ingest_corpus(files);
    for w in &corpus.warnings {
        eprintln!("warning: {w}");
    }
    if corpus.entries.is_empty() {
        return Err(Failure::Io("no readable input files".into()));
    }
    Ok(corpus)
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn cmd_sweep(files: &[PathBuf], variants: &[Variant], grid: &[HeightBound], timing: bool, out: &Path) -> Outcome {
    let corpus = load_corpus(files)?;
    let grid = grid_or_default(grid);
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for entry in &corpus.entries {
        let o = sweep(entry, variants, &grid);
        rows.extend(o.rows);
        failures.extend(o.failures);
    }
    let mut buf = Vec::new();
    write_sweep_csv(&mut buf, &rows, timing).map_err(csv_failure)?;
    write_output(out, &buf)?;
    report_failures(&failures)
}

fn report_failures(failures: &[lzhb::harness::VerificationFailure]) -> Outcome {
    for f in failures {
        eprintln!("{f}");
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{} encodings failed verification", failures.len())))
    }
}

fn cmd_curve(
    files: &[PathBuf],
    variant: Variant,
    ratios: &[f64],
    prefixes: &[usize],
    grid: &[HeightBound],
    out: &Path,
) -> Outcome {
    if ratios.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
        return Err(Failure::Usage("ratios must be positive".into()));
    }
    let corpus = load_corpus(files)?;
    let grid = grid_or_default(grid);
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for entry in &corpus.entries {
        let prefixes = if prefixes.is_empty() { default_prefix_grid(entry.text.len()) } else { prefixes.to_vec() };
        let o = min_height_for_ratio(entry, variant, ratios, &prefixes, &grid);
        rows.extend(o.rows);
        failures.extend(o.failures);
    }
    let mut buf = Vec::new();
    write_curve_csv(&mut buf, &rows).map_err(csv_failure)?;
    write_output(out, &buf)?;
    report_failures(&failures)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Parse { input, variant, h, out } => cmd_parse(&input, variant, h, &out),
        Command::Decode { input, out } => cmd_decode(&input, &out),
        Command::Verify { encoding, original, h } => cmd_verify(&encoding, &original, h),
        Command::Access { encoding, positions, seed, count } => cmd_access(&encoding, &positions, seed, count),
        Command::Gen { family, k, seed, seed_len, mutations, out } => {
            cmd_gen(family, k, seed, seed_len, mutations, &out)
        }
        Command::Sweep { files, variant, grid, no_timing, out } => cmd_sweep(&files, &variant, &grid, !no_timing, &out),
        Command::Curve { files, variant, ratios, prefixes, grid, out } => {
            cmd_curve(&files, variant, &ratios, &prefixes, &grid, &out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.exit(),
    }
}
