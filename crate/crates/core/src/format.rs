//! Reading and writing algebra files.
//!
//! The JSON form is `{"size": n, "one": k, "labels": [...], "table": [[...]]}`
//! with `table[i][j]` the index of `i -> j`; `labels` is optional. The text
//! form has one table row per line, entries separated by whitespace and
//! given as indices or labels, with optional `one <k>` and `labels ...`
//! lines and `#` comments. Without a `one` line the unit is read off the
//! diagonal.

use serde::{Deserialize, Serialize};

use crate::algebra::{validate_hilbert, HilbertAlgebra};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub size: usize,
    pub one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Malformed(msg.into())
}

impl AlgebraFile {
    pub fn from_algebra(alg: &HilbertAlgebra, labels: Option<Vec<String>>) -> Self {
        AlgebraFile { size: alg.len(), one: alg.one(), labels, table: alg.table() }
    }

    /// JSON if the text starts with `{`, the text form otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        let file = if text.trim_start().starts_with('{') {
            serde_json::from_str(text).map_err(|e| malformed(format!("invalid JSON: {e}")))?
        } else {
            parse_text(text)?
        };
        file.check_shape()?;
        Ok(file)
    }

    fn check_shape(&self) -> Result<()> {
        if self.table.len() != self.size {
            return Err(malformed(format!("size is {} but the table has {} rows", self.size, self.table.len())));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.size {
                return Err(malformed(format!("{} labels for {} elements", labels.len(), self.size)));
            }
            for (i, l) in labels.iter().enumerate() {
                if l.is_empty() || l.chars().any(char::is_whitespace) {
                    return Err(malformed(format!("label {i} is empty or contains whitespace")));
                }
                if labels[..i].contains(l) {
                    return Err(malformed(format!("duplicate label `{l}`")));
                }
            }
        }
        Ok(())
    }

    /// Validates the table; malformed input and axiom failures give
    /// different errors.
    pub fn to_algebra(&self) -> Result<HilbertAlgebra> {
        self.check_shape()?;
        validate_hilbert(&self.table, self.one)
    }

    /// The label of element `i`, or its index.
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn labeller(&self) -> impl Fn(usize) -> String + '_ {
        move |i| self.label(i)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn parse_text(text: &str) -> Result<AlgebraFile> {
    let mut one_token: Option<String> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<String>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("nonempty line");
        match first {
            "one" => {
                let k = tokens.next().ok_or_else(|| malformed(format!("line {}: `one` needs a value", lineno + 1)))?;
                if tokens.next().is_some() || one_token.is_some() {
                    return Err(malformed(format!("line {}: repeated or extra `one` value", lineno + 1)));
                }
                one_token = Some(k.to_string());
            }
            "labels" => {
                if labels.is_some() {
                    return Err(malformed(format!("line {}: repeated `labels`", lineno + 1)));
                }
                labels = Some(tokens.map(str::to_string).collect());
            }
            _ => rows.push(line.split_whitespace().map(str::to_string).collect()),
        }
    }
    let size = rows.len();
    if size == 0 {
        return Err(malformed("no table rows"));
    }
    let resolve = |tok: &str| -> Result<usize> {
        if let Some(l) = &labels {
            if let Some(i) = l.iter().position(|x| x == tok) {
                return Ok(i);
            }
        }
        tok.parse::<usize>()
            .map_err(|_| malformed(format!("`{tok}` is neither an index nor a label")))
    };
    let table = rows
        .iter()
        .map(|r| r.iter().map(|t| resolve(t)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let one = match one_token {
        Some(t) => resolve(&t)?,
        None => {
            let diag: Vec<usize> = table.iter().enumerate().map(|(i, r)| r.get(i).copied().unwrap_or(usize::MAX)).collect();
            if diag.windows(2).any(|w| w[0] != w[1]) {
                return Err(malformed("no `one` line and the diagonal is not constant"));
            }
            diag[0]
        }
    };
    Ok(AlgebraFile { size, one, labels, table })
}
