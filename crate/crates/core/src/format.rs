//! The line-oriented algebra file format.
//!
//! ```text
//! # optional comment lines
//! kind: bck
//! order: 4
//! elements: O A B E
//! zero: O
//! one: E
//! complement: E B A O
//! table:
//! O O O O
//! A O O O
//! B A O O
//! E B A O
//! ```
//!
//! Keys come before `table:` in any order; `complement`, and one of
//! `zero`/`one` depending on the kind, are optional. Row `i`, column `j` of
//! the table is `element_i op element_j`. The canonical rendering puts
//! comments first and keys in the order shown, with single spaces.

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraKind, CayleyTable, Constants, Element, FiniteAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: expected `key: value`, got `{text}`")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: duplicate key `{key}`")]
    DuplicateKey { line: usize, key: String },
    #[error("missing key `{0}`")]
    MissingKey(&'static str),
    #[error("line {line}: invalid order `{text}`")]
    BadOrder { line: usize, text: String },
    #[error("`order: {order}` but {names} element names")]
    OrderMismatch { order: usize, names: usize },
    #[error("table has {rows} rows, expected {order}")]
    RowCount { rows: usize, order: usize },
    #[error("line {line}: table row has {cols} entries, expected {order}")]
    ColumnCount {
        line: usize,
        cols: usize,
        order: usize,
    },
    #[error("line {line}: `{name}` is not a declared element")]
    UndeclaredElement { line: usize, name: String },
    #[error("line {line}: `{key}` expects {expected} name(s), got {got}")]
    ValueCount {
        line: usize,
        key: &'static str,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parsed document, before validation into a [`FiniteAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub comments: Vec<String>,
    pub kind: AlgebraKind,
    pub elements: Vec<String>,
    pub zero: Option<String>,
    pub one: Option<String>,
    pub complement: Option<Vec<String>>,
    pub rows: Vec<Vec<String>>,
}

const KEYS: [&str; 6] = ["kind", "order", "elements", "zero", "one", "complement"];

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut comments = Vec::new();
        let mut values: [Option<(usize, &str)>; 6] = Default::default();
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut in_table = false;

        for (line, raw) in lines.by_ref() {
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(c) = trimmed.strip_prefix('#') {
                comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
                continue;
            }
            let Some((key, value)) = trimmed.split_once(':') else {
                return Err(FormatError::Syntax {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let key = key.trim();
            if key == "table" {
                if !value.trim().is_empty() {
                    return Err(FormatError::Syntax {
                        line,
                        text: trimmed.to_string(),
                    });
                }
                in_table = true;
                break;
            }
            let slot =
                KEYS.iter()
                    .position(|k| *k == key)
                    .ok_or_else(|| FormatError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })?;
            if values[slot].is_some() {
                return Err(FormatError::DuplicateKey {
                    line,
                    key: key.to_string(),
                });
            }
            values[slot] = Some((line, value.trim()));
        }
        if !in_table {
            return Err(FormatError::MissingKey("table"));
        }

        let [kind, order, elements, zero, one, complement] = values;
        let (_, kind) = kind.ok_or(FormatError::MissingKey("kind"))?;
        let kind: AlgebraKind = kind.parse()?;
        let (order_line, order_text) = order.ok_or(FormatError::MissingKey("order"))?;
        let order: usize = order_text.parse().map_err(|_| FormatError::BadOrder {
            line: order_line,
            text: order_text.to_string(),
        })?;
        let (_, elements) = elements.ok_or(FormatError::MissingKey("elements"))?;
        let elements: Vec<String> = elements.split_whitespace().map(str::to_string).collect();
        if elements.len() != order {
            return Err(FormatError::OrderMismatch {
                order,
                names: elements.len(),
            });
        }
        let single = |entry: Option<(usize, &str)>,
                      key: &'static str|
         -> Result<Option<String>, FormatError> {
            entry
                .map(|(line, v)| {
                    let parts: Vec<&str> = v.split_whitespace().collect();
                    if parts.len() == 1 {
                        Ok(parts[0].to_string())
                    } else {
                        Err(FormatError::ValueCount {
                            line,
                            key,
                            expected: 1,
                            got: parts.len(),
                        })
                    }
                })
                .transpose()
        };
        let zero = single(zero, "zero")?;
        let one = single(one, "one")?;
        let complement = complement
            .map(|(line, v)| {
                let parts: Vec<String> = v.split_whitespace().map(str::to_string).collect();
                if parts.len() == order {
                    Ok(parts)
                } else {
                    Err(FormatError::ValueCount {
                        line,
                        key: "complement",
                        expected: order,
                        got: parts.len(),
                    })
                }
            })
            .transpose()?;

        let mut rows = Vec::with_capacity(order);
        for (line, raw) in lines {
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(c) = trimmed.strip_prefix('#') {
                comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
                continue;
            }
            let row: Vec<String> = trimmed.split_whitespace().map(str::to_string).collect();
            if row.len() != order {
                return Err(FormatError::ColumnCount {
                    line,
                    cols: row.len(),
                    order,
                });
            }
            rows.push((line, row));
        }
        if rows.len() != order {
            return Err(FormatError::RowCount {
                rows: rows.len(),
                order,
            });
        }
        for (line, row) in &rows {
            if let Some(name) = row.iter().find(|n| !elements.contains(n)) {
                return Err(FormatError::UndeclaredElement {
                    line: *line,
                    name: name.clone(),
                });
            }
        }

        Ok(AlgebraDocument {
            comments,
            kind,
            elements,
            zero,
            one,
            complement,
            rows: rows.into_iter().map(|(_, r)| r).collect(),
        })
    }

    pub fn to_algebra(&self) -> Result<FiniteAlgebra, FormatError> {
        let lookup = |name: &str| -> Result<Element, FormatError> {
            self.elements
                .iter()
                .position(|e| e == name)
                .map(Element)
                .ok_or_else(|| FormatError::UndeclaredElement {
                    line: 0,
                    name: name.to_string(),
                })
        };
        let n = self.elements.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &self.rows {
            for name in row {
                entries.push(lookup(name)?);
            }
        }
        let table = CayleyTable::new(n, entries)?;
        let constants = Constants {
            zero: self.zero.as_deref().map(lookup).transpose()?,
            unit: self.one.as_deref().map(lookup).transpose()?,
        };
        let complement = self
            .complement
            .as_ref()
            .map(|c| c.iter().map(|n| lookup(n)).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        Ok(FiniteAlgebra::new(
            self.kind,
            self.elements.clone(),
            table,
            constants,
            complement,
        )?)
    }

    /// Canonical document for `alg`. `zero` is always written; `one` when
    /// the algebra has a unit; `complement` only if one was supplied
    /// explicitly.
    pub fn from_algebra(alg: &FiniteAlgebra) -> Self {
        let name = |e: Element| alg.name(e).to_string();
        AlgebraDocument {
            comments: Vec::new(),
            kind: alg.kind(),
            elements: alg.names().to_vec(),
            zero: Some(name(alg.zero())),
            one: alg.unit().map(name),
            complement: alg
                .explicit_complement()
                .map(|c| c.iter().map(|&e| name(e)).collect()),
            rows: alg
                .table()
                .rows()
                .map(|r| r.iter().map(|&e| name(e)).collect())
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            if c.is_empty() {
                out.push_str("#\n");
            } else {
                out.push_str(&format!("# {c}\n"));
            }
        }
        out.push_str(&format!("kind: {}\n", self.kind));
        out.push_str(&format!("order: {}\n", self.elements.len()));
        out.push_str(&format!("elements: {}\n", self.elements.join(" ")));
        if let Some(z) = &self.zero {
            out.push_str(&format!("zero: {z}\n"));
        }
        if let Some(o) = &self.one {
            out.push_str(&format!("one: {o}\n"));
        }
        if let Some(c) = &self.complement {
            out.push_str(&format!("complement: {}\n", c.join(" ")));
        }
        out.push_str("table:\n");
        for row in &self.rows {
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses and validates one algebra.
pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, FormatError> {
    AlgebraDocument::parse(text)?.to_algebra()
}

/// Canonical text for `alg`.
pub fn render_algebra(alg: &FiniteAlgebra) -> String {
    AlgebraDocument::from_algebra(alg).render()
}
