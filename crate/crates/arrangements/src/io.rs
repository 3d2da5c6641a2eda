//! Text formats for arrangements, graphs, and matrices.
//!
//! All three formats are line-based, tolerate `#` comments and blank
//! lines, and round-trip bit-exactly through their formatters: parsing a
//! formatted value reproduces it entrywise.

use std::fmt;

use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError};
use crate::bridge::{BridgeError, SimpleGraph};
use crate::exact::{parse_rat, QMatrix, Rat};

/// Syntax error with 1-based line and column of the offending token.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// What can go wrong reading an input file: bad syntax, or a
/// syntactically fine description of an invalid object.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid arrangement: {0}")]
    Arrangement(#[from] ArrangementError),
    #[error("invalid input: {0}")]
    Bridge(#[from] BridgeError),
}

fn fail(line: usize, column: usize, message: impl fmt::Display) -> ParseError {
    ParseError { line, column, message: message.to_string() }
}

/// Significant lines with their 1-based numbers: comments stripped at
/// `#`, blanks skipped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = raw.split('#').next().unwrap_or("");
        if stripped.trim().is_empty() {
            None
        } else {
            Some((i + 1, stripped))
        }
    })
}

/// Tokens of a line with their 1-based starting columns.
fn tokens_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = line.len();
        for (i, c) in chars.by_ref() {
            if c.is_whitespace() {
                end = i;
                break;
            }
        }
        out.push((start + 1, &line[start..end]));
    }
    out
}

fn parse_header<'a>(
    lineno: usize,
    line: &'a str,
    keyword: &str,
) -> Result<Vec<(usize, &'a str)>, ParseError> {
    let tokens = tokens_with_columns(line);
    match tokens.first() {
        Some(&(_, word)) if word == keyword => Ok(tokens),
        Some(&(col, word)) => Err(fail(lineno, col, format!("expected `{keyword}`, found `{word}`"))),
        None => Err(fail(lineno, 1, format!("expected `{keyword}`"))),
    }
}

fn parse_count(lineno: usize, token: Option<&(usize, &str)>, what: &str) -> Result<usize, ParseError> {
    let &(col, word) = token.ok_or_else(|| fail(lineno, 1, format!("missing {what}")))?;
    word.parse()
        .map_err(|_| fail(lineno, col, format!("invalid {what} `{word}`")))
}

/// Parses the arrangement format: a `dim D` header, then one normal
/// vector of `D` rationals per line.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, InputError> {
    let mut lines = significant_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| fail(1, 1, "empty input: expected `dim D` header"))?;
    let tokens = parse_header(lineno, header, "dim")?;
    if tokens.len() > 2 {
        return Err(fail(lineno, tokens[2].0, "trailing tokens after `dim D`").into());
    }
    let dim = parse_count(lineno, tokens.get(1), "dimension")?;
    let mut normals = Vec::new();
    for (lineno, line) in lines {
        let tokens = tokens_with_columns(line);
        if tokens.len() != dim {
            let col = tokens.get(dim).map_or(1, |&(c, _)| c);
            return Err(fail(
                lineno,
                col,
                format!("expected {dim} rationals, found {}", tokens.len()),
            )
            .into());
        }
        let mut normal = Vec::with_capacity(dim);
        for (col, word) in tokens {
            normal.push(parse_rat(word).map_err(|e| fail(lineno, col, e))?);
        }
        normals.push(normal);
    }
    Ok(Arrangement::new(dim, normals)?)
}

/// Canonical arrangement printout; parsing it reproduces the arrangement.
pub fn format_arrangement(a: &Arrangement) -> String {
    let mut out = format!("dim {}\n", a.ambient_dim());
    for h in a.hyperplanes() {
        out.push_str(&h.to_string());
        out.push('\n');
    }
    out
}

/// Parses the graph format: a `vertices M` header, then `edge U V` lines
/// with 0-based endpoints.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, InputError> {
    let mut lines = significant_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| fail(1, 1, "empty input: expected `vertices M` header"))?;
    let tokens = parse_header(lineno, header, "vertices")?;
    if tokens.len() > 2 {
        return Err(fail(lineno, tokens[2].0, "trailing tokens after `vertices M`").into());
    }
    let vertex_count = parse_count(lineno, tokens.get(1), "vertex count")?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let tokens = parse_header(lineno, line, "edge")?;
        if tokens.len() != 3 {
            return Err(fail(lineno, 1, "expected `edge U V`").into());
        }
        let u = parse_count(lineno, tokens.get(1), "vertex index")?;
        let v = parse_count(lineno, tokens.get(2), "vertex index")?;
        edges.push((u, v));
    }
    Ok(SimpleGraph::new(vertex_count, &edges)?)
}

pub fn format_graph(g: &SimpleGraph) -> String {
    let mut out = format!("vertices {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("edge {u} {v}\n"));
    }
    out
}

/// Parses the matrix format: a `rows R cols C` header, then `R` lines of
/// `C` rationals.
pub fn parse_matrix(text: &str) -> Result<QMatrix, InputError> {
    let mut lines = significant_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| fail(1, 1, "empty input: expected `rows R cols C` header"))?;
    let tokens = parse_header(lineno, header, "rows")?;
    let rows = parse_count(lineno, tokens.get(1), "row count")?;
    match tokens.get(2) {
        Some(&(_, "cols")) => {}
        Some(&(col, word)) => return Err(fail(lineno, col, format!("expected `cols`, found `{word}`")).into()),
        None => return Err(fail(lineno, 1, "expected `rows R cols C`").into()),
    }
    let cols = parse_count(lineno, tokens.get(3), "column count")?;
    if tokens.len() > 4 {
        return Err(fail(lineno, tokens[4].0, "trailing tokens after header").into());
    }
    let mut entries: Vec<Rat> = Vec::with_capacity(rows * cols);
    let mut seen_rows = 0;
    for (lineno, line) in lines {
        let tokens = tokens_with_columns(line);
        if tokens.len() != cols {
            let col = tokens.get(cols).map_or(1, |&(c, _)| c);
            return Err(fail(
                lineno,
                col,
                format!("expected {cols} rationals, found {}", tokens.len()),
            )
            .into());
        }
        for (col, word) in tokens {
            entries.push(parse_rat(word).map_err(|e| fail(lineno, col, e))?);
        }
        seen_rows += 1;
    }
    if seen_rows != rows {
        return Err(fail(1, 1, format!("expected {rows} matrix rows, found {seen_rows}")).into());
    }
    Ok(QMatrix::new(rows, cols, entries))
}

pub fn format_matrix(m: &QMatrix) -> String {
    let mut out = format!("rows {} cols {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(Rat::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::worked_example;
    use crate::exact::{rat, ratio};

    #[test]
    fn arrangement_round_trip() {
        let a = worked_example();
        let text = format_arrangement(&a);
        let parsed = parse_arrangement(&text).unwrap();
        assert_eq!(parsed, a);
        assert_eq!(format_arrangement(&parsed), text);
    }

    #[test]
    fn arrangement_with_comments_and_fractions() {
        let text = "# the worked example, scaled\ndim 3\n\n2 0 0  # becomes 1 0 0\n0 1/2 0\n1 1 0\n0 0 -3\n";
        let a = parse_arrangement(text).unwrap();
        assert_eq!(a, worked_example());
    }

    #[test]
    fn arrangement_parse_errors_carry_position() {
        let err = parse_arrangement("dim 3\n1 0\n").unwrap_err();
        assert_eq!(err, InputError::Parse(ParseError {
            line: 2,
            column: 1,
            message: "expected 3 rationals, found 2".into(),
        }));

        let err = parse_arrangement("dim 2\n1 x\n").unwrap_err();
        let InputError::Parse(p) = err else { panic!("expected parse error") };
        assert_eq!((p.line, p.column), (2, 3));

        let err = parse_arrangement("size 2\n").unwrap_err();
        let InputError::Parse(p) = err else { panic!("expected parse error") };
        assert_eq!((p.line, p.column), (1, 1));
    }

    #[test]
    fn arrangement_validation_errors_pass_through() {
        let err = parse_arrangement("dim 2\n1 0\n2 0\n").unwrap_err();
        assert!(matches!(
            err,
            InputError::Arrangement(ArrangementError::DuplicateHyperplane { .. })
        ));
        let err = parse_arrangement("dim 2\n0 0\n").unwrap_err();
        assert!(matches!(err, InputError::Arrangement(ArrangementError::ZeroNormal { .. })));
    }

    #[test]
    fn graph_round_trip() {
        let g = SimpleGraph::new(4, &[(2, 0), (1, 2), (0, 1)]).unwrap();
        let text = format_graph(&g);
        assert_eq!(text, "vertices 4\nedge 0 1\nedge 0 2\nedge 1 2\n");
        let parsed = parse_graph(&text).unwrap();
        assert_eq!(parsed, g);
        assert_eq!(format_graph(&parsed), text);
    }

    #[test]
    fn graph_bad_edge_is_validation() {
        let err = parse_graph("vertices 2\nedge 0 5\n").unwrap_err();
        assert!(matches!(err, InputError::Bridge(BridgeError::BadEdge { .. })));
    }

    #[test]
    fn matrix_round_trip() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1), ratio(-3, 7)],
            vec![ratio(1, 2), rat(0)],
        ]);
        let text = format_matrix(&m);
        assert_eq!(text, "rows 2 cols 2\n1 -3/7\n1/2 0\n");
        let parsed = parse_matrix(&text).unwrap();
        assert_eq!(parsed, m);
    }

    #[test]
    fn matrix_row_count_checked() {
        let err = parse_matrix("rows 2 cols 2\n1 2\n").unwrap_err();
        assert!(matches!(err, InputError::Parse(_)));
    }
}
