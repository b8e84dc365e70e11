//! Plain-text file formats: algebra documents, map files and Cayley tables.
//!
//! An algebra document is line oriented; `#` starts a comment.
//!
//! ```text
//! algebra M2
//! dim 4
//! labels e11 e12 e21 e22
//! unit 1 0 0 1
//! product 0 0 1 0 0 0
//! product 0 1 0 1 0 0
//! ```
//!
//! `product i j c_0 … c_{dim-1}` gives `b_i b_j`; pairs that are not listed
//! multiply to zero and a pair may be listed at most once. `labels` and
//! `unit` are optional. Rationals are written `p` or `p/q`.
//!
//! Serialization is canonical: only nonzero products, in `(i, j)` order, so
//! `serialize(parse(serialize(a))) == serialize(a)` byte for byte.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::algebra::{AlgebraError, Element, FinAlgebra, FiniteGroup, GroupError};
use crate::linalg::{format_rational, parse_rational, Rational, RationalParseError};
use crate::maps::{LinearMap, MapError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: zero denominator in `{token}`")]
    ZeroDenominator { line: usize, column: usize, token: String },
    #[error("invalid algebra: {0}")]
    Algebra(#[from] AlgebraError),
    #[error("invalid group table: {0}")]
    Group(#[from] GroupError),
    #[error("invalid map: {0}")]
    Map(#[from] MapError),
}

/// Whitespace-separated token with its 1-based source position.
#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn syntax(tok: &Token<'_>, message: impl Into<String>) -> DocumentError {
    DocumentError::Syntax {
        line: tok.line,
        column: tok.column,
        message: message.into(),
    }
}

/// Tokens of one line, comments stripped; column counts characters.
fn line_tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in content.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col)),
            (true, Some((b, c))) => {
                out.push(Token {
                    text: &content[b..byte],
                    line: line_no,
                    column: c + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            text: &content[b..],
            line: line_no,
            column: c + 1,
        });
    }
    out
}

fn all_tokens(text: &str) -> Vec<Token<'_>> {
    text.lines()
        .enumerate()
        .flat_map(|(i, l)| line_tokens(i + 1, l))
        .collect()
}

fn rational(tok: &Token<'_>) -> Result<Rational, DocumentError> {
    parse_rational(tok.text).map_err(|e| match e {
        RationalParseError::ZeroDenominator(t) => DocumentError::ZeroDenominator {
            line: tok.line,
            column: tok.column,
            token: t,
        },
        RationalParseError::Invalid(t) => syntax(tok, format!("invalid rational `{t}`")),
    })
}

fn count(tok: &Token<'_>, what: &str) -> Result<usize, DocumentError> {
    tok.text
        .parse()
        .map_err(|_| syntax(tok, format!("expected {what}, found `{}`", tok.text)))
}

/// A named algebra as read from or written to a document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub algebra: FinAlgebra,
}

impl AlgebraDocument {
    pub fn new(name: impl Into<String>, algebra: FinAlgebra) -> Self {
        AlgebraDocument {
            name: name.into(),
            algebra,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let mut name: Option<String> = None;
        let mut dim: Option<usize> = None;
        let mut labels: Option<Vec<String>> = None;
        let mut unit: Option<Vec<Rational>> = None;
        let mut products: Vec<Option<Vec<Rational>>> = Vec::new();
        let mut last_line = 0;

        for (idx, line) in text.lines().enumerate() {
            let toks = line_tokens(idx + 1, line);
            last_line = idx + 1;
            let Some((head, rest)) = toks.split_first() else {
                continue;
            };
            let need_dim = || dim.ok_or_else(|| syntax(head, "`dim` must come before this directive"));
            match head.text {
                "algebra" => {
                    if name.is_some() {
                        return Err(syntax(head, "duplicate `algebra` line"));
                    }
                    if rest.len() != 1 {
                        return Err(syntax(head, "expected `algebra <name>`"));
                    }
                    name = Some(rest[0].text.to_string());
                }
                "dim" => {
                    if dim.is_some() {
                        return Err(syntax(head, "duplicate `dim` line"));
                    }
                    let [d] = rest else {
                        return Err(syntax(head, "expected `dim <n>`"));
                    };
                    let n = count(d, "a dimension")?;
                    if n == 0 {
                        return Err(syntax(d, "dimension must be at least 1"));
                    }
                    dim = Some(n);
                    products = vec![None; n * n];
                }
                "labels" => {
                    let n = need_dim()?;
                    if labels.is_some() {
                        return Err(syntax(head, "duplicate `labels` line"));
                    }
                    if rest.len() != n {
                        return Err(syntax(head, format!("expected {n} labels, found {}", rest.len())));
                    }
                    labels = Some(rest.iter().map(|t| t.text.to_string()).collect());
                }
                "unit" => {
                    let n = need_dim()?;
                    if unit.is_some() {
                        return Err(syntax(head, "duplicate `unit` line"));
                    }
                    if rest.len() != n {
                        return Err(syntax(
                            head,
                            format!("expected {n} unit coefficients, found {}", rest.len()),
                        ));
                    }
                    unit = Some(rest.iter().map(rational).collect::<Result<_, _>>()?);
                }
                "product" => {
                    let n = need_dim()?;
                    if rest.len() != n + 2 {
                        return Err(syntax(head, format!("expected `product i j` and {n} coefficients")));
                    }
                    let i = count(&rest[0], "a basis index")?;
                    let j = count(&rest[1], "a basis index")?;
                    for (t, v) in [(&rest[0], i), (&rest[1], j)] {
                        if v >= n {
                            return Err(syntax(t, format!("basis index {v} out of range for dim {n}")));
                        }
                    }
                    let coeffs = rest[2..].iter().map(rational).collect::<Result<Vec<_>, _>>()?;
                    let slot = &mut products[i * n + j];
                    if slot.is_some() {
                        return Err(syntax(head, format!("product {i} {j} listed twice")));
                    }
                    *slot = Some(coeffs);
                }
                other => return Err(syntax(head, format!("unknown directive `{other}`"))),
            }
        }
        let eof = |msg: &str| DocumentError::Syntax {
            line: last_line.max(1),
            column: 1,
            message: msg.to_string(),
        };
        let name = name.ok_or_else(|| eof("missing `algebra <name>` line"))?;
        let n = dim.ok_or_else(|| eof("missing `dim <n>` line"))?;
        let algebra = FinAlgebra::from_products(
            n,
            |i, j| {
                products[i * n + j]
                    .clone()
                    .unwrap_or_else(|| vec![Rational::from_integer(0.into()); n])
            },
            unit.map(Element::new),
            labels,
        )?;
        Ok(AlgebraDocument { name, algebra })
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let a = &self.algebra;
        let n = a.dim();
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}", self.name);
        let _ = writeln!(out, "dim {n}");
        if let Some(labels) = a.labels() {
            let _ = writeln!(out, "labels {}", labels.join(" "));
        }
        if let Some(u) = a.unit() {
            let _ = writeln!(out, "unit {}", join_rationals(u.coeffs()));
        }
        for i in 0..n {
            for j in 0..n {
                let p = a.basis_product(i, j);
                if p.iter().any(|c| !num_traits::Zero::is_zero(c)) {
                    let _ = writeln!(out, "product {i} {j} {}", join_rationals(p));
                }
            }
        }
        out
    }

    /// `sha256:<hex>` of the canonical text.
    pub fn fingerprint(&self) -> String {
        fingerprint_text(&self.to_text())
    }
}

pub fn fingerprint_text(text: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(text.as_bytes())))
}

fn join_rationals(v: &[Rational]) -> String {
    v.iter().map(format_rational).collect::<Vec<_>>().join(" ")
}

pub fn parse_algebra_document(text: &str) -> Result<FinAlgebra, DocumentError> {
    AlgebraDocument::parse(text).map(|d| d.algebra)
}

/// Map file: `dim` followed by `dim²` rationals in row-major order; entry
/// `(p, q)` is the `b_p`-coefficient of the image of `b_q`.
pub fn parse_map(text: &str) -> Result<LinearMap, DocumentError> {
    let toks = all_tokens(text);
    let Some((head, rest)) = toks.split_first() else {
        return Err(DocumentError::Syntax {
            line: 1,
            column: 1,
            message: "empty map file".into(),
        });
    };
    let n = count(head, "a dimension")?;
    if rest.len() != n * n {
        return Err(syntax(
            head,
            format!("expected {} entries, found {}", n * n, rest.len()),
        ));
    }
    let entries = rest.iter().map(rational).collect::<Result<Vec<_>, _>>()?;
    Ok(LinearMap::from_flat(n, &entries)?)
}

pub fn map_to_text(t: &LinearMap) -> String {
    let n = t.dim();
    let mut out = format!("{n}\n");
    for p in 0..n {
        let row: Vec<Rational> = (0..n).map(|q| t.matrix()[(p, q)].clone()).collect();
        let _ = writeln!(out, "{}", join_rationals(&row));
    }
    out
}

/// Cayley table file: order, identity index, then `order²` entries row by
/// row, `row g, column h` holding the index of `gh`.
pub fn parse_cayley(text: &str) -> Result<FiniteGroup, DocumentError> {
    let toks = all_tokens(text);
    let missing = || DocumentError::Syntax {
        line: 1,
        column: 1,
        message: "expected order and identity index".into(),
    };
    let order_tok = toks.first().ok_or_else(missing)?;
    let id_tok = toks.get(1).ok_or_else(missing)?;
    let order = count(order_tok, "the group order")?;
    let identity = count(id_tok, "the identity index")?;
    let cells = &toks[2..];
    if cells.len() != order * order {
        return Err(syntax(
            order_tok,
            format!("expected {} table entries, found {}", order * order, cells.len()),
        ));
    }
    let flat = cells
        .iter()
        .map(|t| count(t, "an element index"))
        .collect::<Result<Vec<_>, _>>()?;
    let table = flat.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
    Ok(FiniteGroup::new(table, identity)?)
}

pub fn cayley_to_text(g: &FiniteGroup) -> String {
    let mut out = format!("{} {}\n", g.order(), g.identity());
    for row in g.table() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
