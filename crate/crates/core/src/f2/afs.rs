//! The `.afs` text format for affine specs.
//!
//! ```text
//! <n> <m>
//! <row 0 of A: n characters '0'/'1'>
//! ...
//! <row m-1 of A>
//! <b: m characters '0'/'1'>
//! ```
//!
//! Trailing whitespace on any line and trailing blank lines are ignored.

use std::fmt::Write as _;

use super::affine::AffineMap;
use super::bitvec::BitVector;
use super::matrix::BitMatrix;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_bits(text: &str, expected: usize, line: usize, what: &str) -> Result<BitVector> {
    let len = text.chars().count();
    if len != expected {
        return Err(parse_err(
            line,
            format!("{what} has {len} characters, expected {expected}"),
        ));
    }
    let mut v = BitVector::zeros(expected);
    for (i, c) in text.chars().enumerate() {
        match c {
            '0' => {}
            '1' => v.set(i, true),
            other => {
                return Err(parse_err(
                    line,
                    format!(
                        "unexpected character {other:?} in {what} at column {}",
                        i + 1
                    ),
                ))
            }
        }
    }
    Ok(v)
}

pub fn parse_afs(text: &str) -> Result<AffineMap> {
    let mut lines: Vec<&str> = text.lines().map(str::trim_end).collect();
    while lines.last().is_some_and(|l| l.is_empty()) {
        lines.pop();
    }

    let header = lines.first().ok_or_else(|| parse_err(1, "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 || header.starts_with(char::is_whitespace) {
        return Err(parse_err(1, "header must be \"<n> <m>\""));
    }
    let parse_dim = |s: &str, name: &str| {
        if !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(parse_err(
                1,
                format!("{name} is not a decimal count: {s:?}"),
            ));
        }
        s.parse::<usize>()
            .map_err(|e| parse_err(1, format!("{name}: {e}")))
    };
    let n = parse_dim(fields[0], "n")?;
    let m = parse_dim(fields[1], "m")?;

    let line_at = |idx: usize| -> Result<&str> {
        match lines.get(idx) {
            Some(l) => Ok(l),
            // An all-empty line (n == 0 or m == 0) may have been trimmed away.
            None if (idx <= m && n == 0) || (idx == m + 1 && m == 0) => Ok(""),
            None => Err(parse_err(idx + 1, "unexpected end of input")),
        }
    };

    let rows = (0..m)
        .map(|j| parse_bits(line_at(j + 1)?, n, j + 2, &format!("row {j}")))
        .collect::<Result<Vec<_>>>()?;
    let b = parse_bits(line_at(m + 1)?, m, m + 2, "offset b")?;
    if lines.len() > m + 2 {
        return Err(parse_err(m + 3, "unexpected content after offset line"));
    }
    AffineMap::new(BitMatrix::from_rows(n, rows)?, b)
}

pub fn write_afs(spec: &AffineMap) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", spec.input_len(), spec.output_len());
    for row in spec.matrix().iter_rows() {
        let _ = writeln!(out, "{row}");
    }
    let _ = writeln!(out, "{}", spec.offset());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn parses_simple_file() {
        let spec = parse_afs("2 3\n11\n01  \n10\n101\n\n").unwrap();
        assert_eq!(spec.input_len(), 2);
        assert_eq!(spec.output_len(), 3);
        assert!(spec.matrix().get(0, 1) && !spec.matrix().get(1, 0));
        assert_eq!(spec.offset().to_string(), "101");
    }

    #[test]
    fn round_trips() {
        let spec = AffineMap::random(6, 9, 0.4, 3).unwrap();
        assert_eq!(parse_afs(&write_afs(&spec)).unwrap(), spec);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(line_of(parse_afs("2 2\n11\n1\n00\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_afs("2 2\n11\n1x\n00\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_afs("2 2\n11\n11\n0\n").unwrap_err()), 4);
        assert_eq!(line_of(parse_afs("2 2\n11\n11\n").unwrap_err()), 4);
        assert_eq!(line_of(parse_afs("2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_afs("a 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_afs("1 1\n1\n1\n1\n").unwrap_err()), 4);
        assert_eq!(line_of(parse_afs("").unwrap_err()), 1);
    }
}
