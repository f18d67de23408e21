//! Canonical text format.
//!
//! ```text
//! LZHB <variant> v1 n=<n> h=<h|inf> z=<z>
//! L <byte>            literal
//! C <len> <src>       copy
//! R <len> <byte>      run
//! P <len> <src> <p>   periodic copy
//! ```
//!
//! Positions are 1-based, lines end in LF.

use std::fmt::Write;

use crate::error::{EncodingError, FormatError};

use super::{Encoding, HeightBound, Phrase, Variant};

const MAGIC: &str = "LZHB";
const VERSION: &str = "v1";

pub fn serialize(encoding: &Encoding) -> String {
    let mut out = String::with_capacity(16 * encoding.size() + 64);
    writeln!(
        out,
        "{MAGIC} {} {VERSION} n={} h={} z={}",
        encoding.variant(),
        encoding.len(),
        encoding.bound(),
        encoding.size()
    )
    .unwrap();
    for ph in encoding.phrases() {
        match *ph {
            Phrase::Literal(c) => writeln!(out, "L {c}"),
            Phrase::Copy { len, src } => writeln!(out, "C {len} {src}"),
            Phrase::Run { len, sym } => writeln!(out, "R {len} {sym}"),
            Phrase::Periodic { len, src, period } => writeln!(out, "P {len} {src} {period}"),
        }
        .unwrap();
    }
    out
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn field<'a>(line: usize, token: &'a str, name: &str) -> Result<&'a str, FormatError> {
    token
        .strip_prefix(name)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| syntax(line, format!("expected {name}=..., got {token:?}")))
}

fn number<T: std::str::FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T, FormatError> {
    let token = token.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} {token:?}")))
}

pub fn deserialize(input: &str) -> Result<Encoding, FormatError> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| syntax(1, "empty input"))?;
    let tokens: Vec<&str> = header.split_ascii_whitespace().collect();
    if tokens.first() != Some(&MAGIC) {
        return Err(syntax(1, "missing LZHB header"));
    }
    if tokens.len() != 6 {
        return Err(syntax(1, "header must have 6 fields"));
    }
    let variant: Variant = tokens[1].parse().map_err(|e: String| syntax(1, e))?;
    if tokens[2] != VERSION {
        return Err(FormatError::Version(tokens[2].to_string()));
    }
    let n: usize = number(1, Some(field(1, tokens[3], "n")?), "n")?;
    let bound: HeightBound = field(1, tokens[4], "h")?.parse().map_err(|e: String| syntax(1, e))?;
    let z: usize = number(1, Some(field(1, tokens[5], "z")?), "z")?;

    let mut phrases = Vec::with_capacity(z.min(1 << 20));
    for (ln, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        if phrases.len() == z {
            return Err(syntax(ln, format!("more than z={z} phrases")));
        }
        let mut t = line.split_ascii_whitespace();
        let tag = t.next().unwrap_or_default();
        let ph = match tag {
            "L" => Phrase::Literal(number(ln, t.next(), "byte")?),
            "C" => Phrase::Copy {
                len: number(ln, t.next(), "length")?,
                src: number(ln, t.next(), "source")?,
            },
            "R" => Phrase::Run {
                len: number(ln, t.next(), "length")?,
                sym: number(ln, t.next(), "byte")?,
            },
            "P" => Phrase::Periodic {
                len: number(ln, t.next(), "length")?,
                src: number(ln, t.next(), "source")?,
                period: number(ln, t.next(), "period")?,
            },
            other => return Err(syntax(ln, format!("unknown phrase tag {other:?}"))),
        };
        if t.next().is_some() {
            return Err(syntax(ln, "trailing tokens"));
        }
        phrases.push(ph);
    }
    if phrases.len() != z {
        return Err(FormatError::Truncated {
            declared: z,
            found: phrases.len(),
        });
    }
    let encoding = Encoding::new(variant, bound, phrases)?;
    if encoding.len() != n {
        return Err(EncodingError::LengthMismatch {
            declared: n,
            actual: encoding.len(),
        }
        .into());
    }
    Ok(encoding)
}
