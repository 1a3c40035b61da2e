//! Plain-text poset exchange format.
//!
//! ```text
//! poset 3
//! # label 0 a
//! # label 2 c
//! 0 1
//! 1 2
//! ```
//!
//! The header gives the element count. Each edge line `x y` states that `x`
//! is covered by `y`; redundant (transitive) edges are accepted and reduced.
//! Comment lines start with `#`; `# label i <text>` names element `i`,
//! otherwise the label is the index. Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Poset, PosetError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `poset N` header")]
    MissingHeader,
    #[error(transparent)]
    Poset(#[from] PosetError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<Poset, FormatError> {
    let mut size: Option<usize> = None;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut parts = comment.trim_start().splitn(3, char::is_whitespace);
            if parts.next() == Some("label") {
                let idx = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line_no, "malformed label line"))?;
                let text = parts.next().unwrap_or("").trim().to_string();
                labels.push((line_no, idx, text));
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (size, fields.as_slice()) {
            (None, ["poset", n]) => {
                size = Some(
                    n.parse()
                        .map_err(|_| syntax(line_no, "bad element count"))?,
                );
            }
            (None, _) => return Err(FormatError::MissingHeader),
            (Some(_), ["poset", _]) => return Err(syntax(line_no, "duplicate header")),
            (Some(n), [x, y]) => {
                let parse_idx = |s: &str| -> Result<usize, FormatError> {
                    let v: usize = s
                        .parse()
                        .map_err(|_| syntax(line_no, format!("bad element index `{s}`")))?;
                    if v >= n {
                        return Err(syntax(line_no, format!("element {v} out of range")));
                    }
                    Ok(v)
                };
                let (a, b) = (parse_idx(x)?, parse_idx(y)?);
                if a == b {
                    return Err(syntax(line_no, "self-loop"));
                }
                edges.push((a, b));
            }
            (Some(_), _) => return Err(syntax(line_no, "expected `x y`")),
        }
    }

    let n = size.ok_or(FormatError::MissingHeader)?;
    let mut names = Poset::default_labels(n);
    for (line_no, idx, text) in labels {
        if idx >= n {
            return Err(syntax(
                line_no,
                format!("label for element {idx} out of range"),
            ));
        }
        names[idx] = text;
    }
    Ok(Poset::from_relations(names, &edges)?)
}

/// Writes the Hasse diagram, with a label line for every element whose
/// label differs from its index.
pub fn write(poset: &Poset) -> String {
    let mut out = format!("poset {}\n", poset.len());
    for (i, label) in poset.labels().iter().enumerate() {
        if *label != i.to_string() {
            writeln!(out, "# label {i} {label}").unwrap();
        }
    }
    for (x, y) in poset.hasse_edges() {
        writeln!(out, "{x} {y}").unwrap();
    }
    out
}
