//! JSON interchange and DOT export.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::Poset;
use crate::error::{Error, Result};

/// `{"n": int, "covers": [[int,int],...], "labels": [str,...]?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PosetJson {
    pub fn build(&self) -> Result<Poset> {
        Poset::build(self.n, &self.covers, self.labels.clone())
    }
}

impl Poset {
    /// Hasse-reduced, lexicographically sorted interchange form.
    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.len(),
            covers: self.cover_pairs(),
            labels: self.labels().map(|l| l.to_vec()),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Poset> {
        let j: PosetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.build()
    }

    /// Hasse diagram in DOT, edges drawn bottom to top, nodes grouped by rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        let max_rank = self.rank(self.top());
        for r in 0..=max_rank {
            let ids: Vec<usize> = (0..self.len()).filter(|&x| self.rank(x) == r).collect();
            let nodes: Vec<String> = ids
                .iter()
                .map(|&x| format!("n{x} [label=\"{}\"];", escape(&self.label(x))))
                .collect();
            let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join(" "));
        }
        for (a, b) in self.cover_pairs() {
            let _ = writeln!(out, "  n{a} -> n{b} [dir=none];");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
