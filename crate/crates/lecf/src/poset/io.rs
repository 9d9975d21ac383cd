//! Poset wire formats: the JSON schema used by the CLI and a DOT export
//! of the Hasse diagram.

use serde::{Deserialize, Serialize};

use super::Poset;
use crate::error::{Error, Result};

/// JSON schema:
/// `{"n": 4, "covers": [[0,1],[2,1],[2,3]], "labels": [...], "x": 2}`
/// with `labels` and `x` optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
}

impl PosetJson {
    pub fn from_poset(poset: &Poset, x: Option<usize>) -> Self {
        PosetJson {
            n: poset.n(),
            covers: poset.covers().to_vec(),
            labels: poset.labels().map(|l| l.to_vec()),
            x,
        }
    }

    pub fn into_poset(self) -> Result<(Poset, Option<usize>)> {
        if let Some(x) = self.x {
            if x >= self.n {
                return Err(Error::domain(format!(
                    "distinguished element {x} out of range for {} elements",
                    self.n
                )));
            }
        }
        let mut poset = Poset::new(self.n, self.covers)?;
        if let Some(labels) = self.labels {
            poset = poset.with_labels(labels)?;
        }
        Ok((poset, self.x))
    }
}

/// Reads a poset from JSON text. Accepts either the bare schema or any
/// object with a `poset` field holding it (so construction reports can be
/// piped straight back in).
pub fn poset_from_json_str(s: &str) -> Result<(Poset, Option<usize>)> {
    let value: serde_json::Value = serde_json::from_str(s)
        .map_err(|e| Error::parse(truncate(s), e.column().saturating_sub(1), e.to_string()))?;
    let inner = if value.get("n").is_some() {
        value
    } else if let Some(p) = value.get("poset") {
        p.clone()
    } else {
        return Err(Error::domain(
            "JSON object has neither an \"n\" field nor a \"poset\" field",
        ));
    };
    let parsed: PosetJson = serde_json::from_value(inner)
        .map_err(|e| Error::domain(format!("invalid poset JSON: {e}")))?;
    parsed.into_poset()
}

fn truncate(s: &str) -> String {
    const LIMIT: usize = 120;
    if s.len() <= LIMIT {
        s.to_string()
    } else {
        let mut end = LIMIT;
        while !s.is_char_boundary(end) {
            end -= 1;
        }
        format!("{}...", &s[..end])
    }
}

/// DOT rendering of the Hasse diagram, drawn bottom-up. The distinguished
/// element, if any, is double-circled. Node and edge order is stable so
/// diffs of the output are meaningful.
pub fn to_dot(poset: &Poset, x: Option<usize>) -> String {
    let mut out = String::new();
    out.push_str("digraph poset {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=circle];\n");
    for v in 0..poset.n() {
        let label = match poset.labels() {
            Some(labels) => labels[v].replace('\\', "\\\\").replace('"', "\\\""),
            None => v.to_string(),
        };
        if x == Some(v) {
            out.push_str(&format!("  {v} [label=\"{label}\", shape=doublecircle];\n"));
        } else {
            out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
        }
    }
    for &(u, v) in poset.covers() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}
