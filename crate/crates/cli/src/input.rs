//! Matrix documents: a text format and a JSON format.
//!
//! Text: lines starting with `#` are comments, the first remaining line is
//! `N`, then `N` rows of whitespace-separated integers. JSON:
//! `{"matrix": [[...], ...]}`, recognised by a leading `{`.

use std::fmt;
use std::path::Path;

use ckinv::ck::ZeroOneMatrix;
use ckinv::{BigInt, IntMatrix};
use serde::Deserialize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn read_matrix(path: &Path) -> Result<IntMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_matrix(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_text(text: &str) -> Result<IntMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (size_line, header) = lines.next().ok_or_else(|| err(1, 1, "missing matrix size"))?;
    let header_tokens = tokens(header);
    if header_tokens.len() != 1 {
        let col = header_tokens.get(1).map_or(1, |t| t.0);
        return Err(err(size_line, col, "size line must hold a single integer N"));
    }
    let (col, tok) = header_tokens[0];
    let n: usize = tok
        .parse()
        .map_err(|_| err(size_line, col, format!("invalid matrix size {tok:?}")))?;

    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut width = None;
    for (line_no, line) in lines {
        if rows.len() == n {
            return Err(err(line_no, 1, format!("more than {n} rows")));
        }
        let toks = tokens(line);
        let row = toks
            .iter()
            .map(|&(c, t)| {
                t.parse::<BigInt>()
                    .map_err(|_| err(line_no, c, format!("invalid entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(err(
                    line_no,
                    1,
                    format!("ragged row: {} entries, expected {w}", row.len()),
                ));
            }
            _ => {}
        }
        rows.push(row);
    }
    if rows.len() < n {
        let last = text.lines().count().max(1);
        return Err(err(last, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    let cols = width.unwrap_or(0);
    Ok(IntMatrix::from_fn(n, cols, |i, j| rows[i][j].clone()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    matrix: Vec<Vec<serde_json::Number>>,
}

fn parse_json(text: &str) -> Result<IntMatrix, ParseError> {
    let doc: JsonDocument =
        serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
    let mut rows = Vec::with_capacity(doc.matrix.len());
    for (i, row) in doc.matrix.iter().enumerate() {
        let parsed = row
            .iter()
            .map(|x| {
                x.to_string()
                    .parse::<BigInt>()
                    .map_err(|_| err(1, 1, format!("row {i}: entry {x} is not an integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first().map(|r: &Vec<BigInt>| r.len()) {
            if parsed.len() != first {
                return Err(err(
                    1,
                    1,
                    format!("ragged row {i}: {} entries, expected {first}", parsed.len()),
                ));
            }
        }
        rows.push(parsed);
    }
    let cols = rows.first().map_or(0, Vec::len);
    Ok(IntMatrix::from_fn(rows.len(), cols, |i, j| rows[i][j].clone()))
}

/// Text rendering accepted by [`parse_matrix`].
pub fn render_matrix(a: &ZeroOneMatrix, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format!("{}\n{a}", a.size()));
    if !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_with_comments() {
        let m = parse_matrix("# all ones\n\n2\n1 1\n  1   1\n").unwrap();
        assert_eq!(m, IntMatrix::from_i64_rows(&[[1, 1], [1, 1]]));
    }

    #[test]
    fn rectangular_text_parses() {
        let m = parse_matrix("2\n1 0 1\n0 1 1\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
    }

    #[test]
    fn ragged_text_is_positioned() {
        let e = parse_matrix("2\n1 1\n1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("ragged"));
    }

    #[test]
    fn bad_tokens() {
        let e = parse_matrix("2\n1 x\n1 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("two\n").is_err());
        assert!(parse_matrix("2\n1 1\n").is_err());
        assert!(parse_matrix("1\n1\n1\n").is_err());
    }

    #[test]
    fn json_documents() {
        let m = parse_matrix(r#"{"matrix": [[1, 1], [1, 0]]}"#).unwrap();
        assert_eq!(m, IntMatrix::from_i64_rows(&[[1, 1], [1, 0]]));
        assert!(parse_matrix(r#"{"matrix": [[1, 1], [1]]}"#).is_err());
        assert!(parse_matrix(r#"{"matrix": [[1.5]]}"#).is_err());
        assert!(parse_matrix(r#"{"rows": []}"#).is_err());
        assert!(parse_matrix("{").is_err());
    }

    #[test]
    fn large_entries_survive_parsing() {
        let m = parse_matrix("1\n123456789012345678901234567890\n").unwrap();
        assert_eq!(m[(0, 0)].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn render_roundtrip() {
        let a = ckinv::ck::gen_amplified(2, 2).unwrap();
        let text = render_matrix(&a, Some("amplified 2 2"));
        assert_eq!(parse_matrix(&text).unwrap(), a.to_int_matrix());
    }
}
