//! Text formats for monoids and homomorphisms.
//!
//! A Cayley file holds a header `n e z`, a line of `n` labels, then `n` rows
//! of `n` element indices. A homomorphism file holds
//! `hom <source-file> <target-file>` followed by the image of each source
//! element. Blank lines and lines starting with `#` are skipped in both.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::monoid::{FiniteMonoid, MonoidError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// A whitespace-separated token with its 1-based position.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Non-comment lines with their 1-based line numbers, split into tokens.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &line[s..col],
                        column: line[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        Some((k + 1, tokens))
    })
}

fn number(line: usize, tok: &Token<'_>, what: &str) -> Result<usize, FormatError> {
    tok.text.parse().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("expected {what}, found {:?}", tok.text),
        )
    })
}

fn expect_len(
    line: usize,
    tokens: &[Token<'_>],
    expected: usize,
    what: &str,
) -> Result<(), FormatError> {
    if tokens.len() == expected {
        return Ok(());
    }
    let column = tokens.get(expected).map_or_else(
        || {
            tokens
                .last()
                .map_or(1, |t| t.column + t.text.chars().count())
        },
        |t| t.column,
    );
    Err(syntax(
        line,
        column,
        format!("expected {expected} {what}, found {}", tokens.len()),
    ))
}

pub fn parse_cayley(text: &str) -> Result<FiniteMonoid, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("missing header".into()))?;
    expect_len(hl, &header, 3, "header fields (n e z)")?;
    let n = number(hl, &header[0], "element count")?;
    let e = number(hl, &header[1], "identity index")?;
    let z = number(hl, &header[2], "zero index")?;
    if n == 0 {
        return Err(MonoidError::Empty.into());
    }
    let (ll, label_toks) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("missing labels".into()))?;
    expect_len(ll, &label_toks, n, "labels")?;
    let labels: Vec<String> = label_toks.iter().map(|t| t.text.to_string()).collect();
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (rl, toks) = lines
            .next()
            .ok_or_else(|| FormatError::Truncated(format!("expected {n} rows, found {r}")))?;
        expect_len(rl, &toks, n, "entries")?;
        let row = toks
            .iter()
            .map(|t| {
                let v = number(rl, t, "element index")?;
                if v >= n {
                    return Err(syntax(
                        rl,
                        t.column,
                        format!("index {v} out of range for {n} elements"),
                    ));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if let Some((extra, toks)) = lines.next() {
        return Err(syntax(
            extra,
            toks[0].column,
            "unexpected content after the table",
        ));
    }
    Ok(FiniteMonoid::new(labels, &rows, e, z)?)
}

pub fn write_cayley(m: &FiniteMonoid) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", m.size(), m.identity(), m.zero());
    let _ = writeln!(out, "{}", m.labels().join(" "));
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

fn read(path: &Path) -> Result<String, FormatError> {
    fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_cayley(path: &Path) -> Result<FiniteMonoid, FormatError> {
    parse_cayley(&read(path)?)
}

/// A parsed homomorphism file. Paths are resolved against the directory of
/// the file itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpec {
    pub source: PathBuf,
    pub target: PathBuf,
    pub map: Vec<usize>,
}

pub fn parse_hom(text: &str, base: &Path) -> Result<HomSpec, FormatError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("missing hom header".into()))?;
    if header[0].text != "hom" {
        return Err(syntax(
            hl,
            header[0].column,
            "expected `hom <source-file> <target-file>`",
        ));
    }
    expect_len(hl, &header, 3, "fields (hom source target)")?;
    let (ml, toks) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("missing image line".into()))?;
    let map = toks
        .iter()
        .map(|t| number(ml, t, "element index"))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some((extra, toks)) = lines.next() {
        return Err(syntax(
            extra,
            toks[0].column,
            "unexpected content after the image line",
        ));
    }
    Ok(HomSpec {
        source: base.join(header[1].text),
        target: base.join(header[2].text),
        map,
    })
}

pub fn read_hom(path: &Path) -> Result<HomSpec, FormatError> {
    let base = path.parent().unwrap_or_else(|| Path::new(""));
    parse_hom(&read(path)?, base)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4: &str = "# zn4\n4 1 0\n0 1 2 3\n0 0 0 0\n0 1 2 3\n\n0 2 0 2\n0 3 2 1\n";

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let m = parse_cayley(Z4).unwrap();
        assert_eq!(m, FiniteMonoid::zn_mul(4).unwrap());
    }

    #[test]
    fn round_trips() {
        for m in [
            FiniteMonoid::zn_mul(6).unwrap(),
            FiniteMonoid::chain(3).unwrap(),
        ] {
            assert_eq!(parse_cayley(&write_cayley(&m)).unwrap(), m);
        }
    }

    #[test]
    fn reports_positions() {
        let bad = "2 1 0\na b\n0 0\n0 x\n";
        match parse_cayley(bad).unwrap_err() {
            FormatError::Syntax { line, column, .. } => assert_eq!((line, column), (4, 3)),
            e => panic!("{e}"),
        }
        let short = "3 1 0\na b c\n0 0 0\n0 1\n";
        match parse_cayley(short).unwrap_err() {
            FormatError::Syntax { line, .. } => assert_eq!(line, 4),
            e => panic!("{e}"),
        }
        assert!(matches!(
            parse_cayley("2 1 0\na b\n0 0\n").unwrap_err(),
            FormatError::Truncated(_)
        ));
        let range = "2 1 0\na b\n0 0\n0 5\n";
        assert!(matches!(
            parse_cayley(range).unwrap_err(),
            FormatError::Syntax {
                line: 4,
                column: 3,
                ..
            }
        ));
    }

    #[test]
    fn structural_errors_surface() {
        let noncomm = "3 1 0\nz e a\n0 0 0\n0 1 2\n0 2 0\n";
        assert!(parse_cayley(noncomm).is_ok());
        let not_identity = "2 1 0\nz e\n0 0\n0 0\n";
        assert!(matches!(
            parse_cayley(not_identity).unwrap_err(),
            FormatError::Monoid(_)
        ));
    }

    #[test]
    fn hom_paths_are_relative() {
        let h = parse_hom("hom a.cay b.cay\n0 1 0 1\n", Path::new("dir")).unwrap();
        assert_eq!(h.source, Path::new("dir/a.cay"));
        assert_eq!(h.target, Path::new("dir/b.cay"));
        assert_eq!(h.map, vec![0, 1, 0, 1]);
        assert!(parse_hom("map a b\n0\n", Path::new("")).is_err());
    }
}
