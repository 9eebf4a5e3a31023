//! The plain-text arrangement file format.
//!
//! ```text
//! # braid arrangement in C^3
//! arrangement 3
//! 1 -1 0 ; 0   # H_{01}
//! 1 0 -1 ; 0   # H_{02}
//! 0 1 -1 ; 0   # H_{12}
//! ```
//!
//! The header `arrangement <n>` comes first. Each following nonempty line is
//! one hyperplane `a · x = b`: `n` coefficient tokens, a literal `;`, then the
//! constant. A token is `p`, `p/q` or `p/q:r/s` (real:imaginary) with
//! arbitrary-precision integers. `#` starts a comment; a comment on a
//! hyperplane line is kept as that hyperplane's label.

use std::fmt::Write as _;

use thiserror::Error;

use crate::arrangement::Arrangement;
use crate::error::ArrangementError;
use crate::linalg::GaussianRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("expected {expected} coefficients, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("duplicate of the hyperplane on line {first_line}")]
    DuplicateHyperplane { first_line: usize },
}

/// 1-based column of `token` inside `line` (token must be a subslice).
fn column_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    let mut arrangement: Option<Arrangement> = None;
    let mut hyperplane_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.split_once('#') {
            Some((b, c)) => (b, Some(c.trim())),
            None => (raw, None),
        };
        if body.trim().is_empty() {
            continue;
        }
        let syntax = |column: usize, msg: String| ParseError {
            line: line_no,
            column,
            kind: ParseErrorKind::Syntax(msg),
        };

        let Some(a) = arrangement.as_mut() else {
            let mut tokens = body.split_whitespace();
            let head = tokens.next().expect("nonempty");
            if head != "arrangement" {
                return Err(syntax(
                    column_of(raw, head),
                    format!("expected header `arrangement <n>`, found `{head}`"),
                ));
            }
            let Some(dim_tok) = tokens.next() else {
                return Err(syntax(raw.trim_end().len() + 1, "missing dimension".into()));
            };
            let dim: usize = dim_tok
                .parse()
                .map_err(|_| syntax(column_of(raw, dim_tok), format!("bad dimension `{dim_tok}`")))?;
            if let Some(extra) = tokens.next() {
                return Err(syntax(column_of(raw, extra), format!("unexpected `{extra}`")));
            }
            arrangement = Some(Arrangement::empty(dim));
            continue;
        };

        let Some((lhs, rhs)) = body.split_once(';') else {
            return Err(syntax(body.trim_end().len() + 1, "missing `;` before the constant".into()));
        };
        let coeff_tokens: Vec<&str> = lhs.split_whitespace().collect();
        let const_tokens: Vec<&str> = rhs.split_whitespace().collect();
        let parse_tok = |tok: &str| -> Result<GaussianRational, ParseError> {
            tok.parse::<GaussianRational>()
                .map_err(|e| syntax(column_of(raw, tok), e.to_string()))
        };
        let coeffs = coeff_tokens.iter().map(|t| parse_tok(t)).collect::<Result<Vec<_>, _>>()?;
        let constant = match const_tokens.as_slice() {
            [tok] => parse_tok(tok)?,
            [] => return Err(syntax(body.trim_end().len() + 1, "missing constant after `;`".into())),
            [_, extra, ..] => {
                return Err(syntax(column_of(raw, extra), format!("unexpected `{extra}` after the constant")))
            }
        };
        let label = comment.filter(|c| !c.is_empty()).map(str::to_string);
        a.push(coeffs, constant, label).map_err(|e| {
            let kind = match e {
                ArrangementError::DimensionMismatch { expected, found, .. } => {
                    ParseErrorKind::DimensionMismatch { expected, found }
                }
                ArrangementError::ZeroNormal { .. } => ParseErrorKind::ZeroNormal,
                ArrangementError::DuplicateHyperplane { first, .. } => ParseErrorKind::DuplicateHyperplane {
                    first_line: hyperplane_lines[first],
                },
                other => ParseErrorKind::Syntax(other.to_string()),
            };
            let column = raw.len() - raw.trim_start().len() + 1;
            ParseError {
                line: line_no,
                column,
                kind,
            }
        })?;
        hyperplane_lines.push(line_no);
    }

    arrangement.ok_or(ParseError {
        line: text.lines().count().max(1),
        column: 1,
        kind: ParseErrorKind::Syntax("missing header `arrangement <n>`".into()),
    })
}

/// Writes `a` in the file format; labels become trailing comments.
pub fn serialize_arrangement(a: &Arrangement) -> String {
    let mut out = format!("arrangement {}\n", a.ambient_dim());
    for (i, h) in a.hyperplanes().iter().enumerate() {
        let coeffs: Vec<String> = h.normal().iter().map(ToString::to_string).collect();
        if coeffs.is_empty() {
            out.push(';');
        } else {
            let _ = write!(out, "{} ;", coeffs.join(" "));
        }
        let _ = write!(out, " {}", h.constant());
        if let Some(label) = a.label(i) {
            let _ = write!(out, "  # {}", label.replace('\n', " ").trim());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{braid_arrangement, from_integer_forms};

    #[test]
    fn parses_braid_two() {
        let a = parse_arrangement("arrangement 3\n1 -1 0 ; 0\n1 0 -1 ; 0\n0 1 -1 ; 0\n").unwrap();
        assert_eq!(a.hyperplanes(), braid_arrangement(2).unwrap().hyperplanes());
        assert!(a.labels().iter().all(Option::is_none));
    }

    #[test]
    fn parses_point_in_line() {
        let a = parse_arrangement("arrangement 1\n1 ; 0\n").unwrap();
        assert_eq!(a, from_integer_forms(1, &[&[1, 0]]));
    }

    #[test]
    fn zero_normal_reports_line() {
        let e = parse_arrangement("arrangement 2\n0 0 ; 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::ZeroNormal);
    }

    #[test]
    fn comments_labels_and_complex_tokens() {
        let text = "# leading comment\n\narrangement 2\n1/2:1 -3 ; 0:-1/7  # A\n0 1 ; 2 #\n";
        let a = parse_arrangement(text).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.label(0), Some("A"));
        assert_eq!(a.label(1), None);
        assert_eq!(a.hyperplane(0).normal()[0], "1/2:1".parse().unwrap());
        assert_eq!(parse_arrangement(&serialize_arrangement(&a)).unwrap(), a);
    }

    #[test]
    fn error_positions() {
        let e = parse_arrangement("arrangment 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_arrangement("arrangement 2\n1 x ; 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_arrangement("arrangement 2\n1 0 ; 0\n1 0 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_arrangement("arrangement 2\n1 0 0 ; 0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DimensionMismatch { expected: 2, found: 3 });
        let e = parse_arrangement("arrangement 2\n1 0 ; 0\n\n  2 0 ; 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 3));
        assert_eq!(e.kind, ParseErrorKind::DuplicateHyperplane { first_line: 2 });
        let e = parse_arrangement("arrangement 2\n1 0 ; 0 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 9));
        let e = parse_arrangement("# nothing\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_arrangement("arrangement 2\n1 0 ; \n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        let e = parse_arrangement("arrangement 1\n1/0 ; 0\n").unwrap_err();
        assert_eq!(e.column, 1);
    }

    #[test]
    fn serialize_braid_text() {
        let text = serialize_arrangement(&braid_arrangement(2).unwrap());
        assert_eq!(
            text,
            "arrangement 3\n1 -1 0 ; 0  # H_{01}\n1 0 -1 ; 0  # H_{02}\n0 1 -1 ; 0  # H_{12}\n"
        );
    }

    #[test]
    fn zero_dimensional_roundtrip() {
        let a = Arrangement::empty(0);
        assert_eq!(parse_arrangement(&serialize_arrangement(&a)).unwrap(), a);
    }
}
