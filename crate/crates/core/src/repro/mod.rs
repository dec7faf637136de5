//! Exact reproduction of the numeric claims about special matchings, used by
//! `matchmonoid reproduce` and the acceptance suite.

mod claims;

use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

pub use claims::fibonacci;

use claims::{
    chain_fibonacci, divisor_monoid, double_quotient_moebius, fig_s3_lattice,
    invol_projection_table, invol_s4_counts, invol_s4_matchings, product_decomposition,
    sn_projection_table,
};

/// Result of one reproduced claim; `pass` iff `expected == computed`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReproReport {
    pub claim: String,
    /// What is being reproduced, in plain words.
    pub reference: String,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
    pub runtime_ms: u64,
    /// Observations recorded without being asserted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub(crate) struct Outcome {
    reference: String,
    expected: Value,
    computed: Value,
    notes: Vec<String>,
}

impl Outcome {
    pub(crate) fn new(reference: impl Into<String>, expected: Value, computed: Value) -> Self {
        Self {
            reference: reference.into(),
            expected,
            computed,
            notes: Vec::new(),
        }
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

fn timed(claim: &str, f: impl FnOnce() -> Result<Outcome>) -> Result<ReproReport> {
    let start = Instant::now();
    let o = f()?;
    Ok(ReproReport {
        claim: claim.to_string(),
        reference: o.reference,
        pass: o.expected == o.computed,
        expected: o.expected,
        computed: o.computed,
        runtime_ms: start.elapsed().as_millis() as u64,
        notes: o.notes,
    })
}

pub const CLAIMS: &[&str] = &[
    "fig-s3-lattice",
    "invol-s4-counts",
    "invol-s4-matchings",
    "divisor-monoid",
    "chain-fibonacci",
    "sn-projection-table",
    "invol-projection-table",
    "double-quotient-moebius",
    "product-decomposition",
];

/// Default generator counts for the table claims when no `n` is given.
pub const DEFAULT_TABLE_RANKS: std::ops::RangeInclusive<usize> = 1..=4;

/// Runs one claim, or every claim for `"all"`. `n` selects the rank for the
/// table claims; without it they run over [`DEFAULT_TABLE_RANKS`].
pub fn reproduce(claim: &str, n: Option<usize>) -> Result<Vec<ReproReport>> {
    if claim == "all" {
        let mut out = Vec::new();
        for c in CLAIMS {
            out.extend(reproduce(c, n)?);
        }
        return Ok(out);
    }
    let ranks: Vec<usize> = match n {
        Some(n) => vec![n],
        None => DEFAULT_TABLE_RANKS.collect(),
    };
    match claim {
        "fig-s3-lattice" => Ok(vec![timed(claim, fig_s3_lattice)?]),
        "invol-s4-counts" => Ok(vec![timed(claim, invol_s4_counts)?]),
        "invol-s4-matchings" => Ok(vec![timed(claim, invol_s4_matchings)?]),
        "divisor-monoid" => Ok(vec![timed(claim, divisor_monoid)?]),
        "chain-fibonacci" => Ok(vec![timed(claim, chain_fibonacci)?]),
        "sn-projection-table" => ranks
            .into_iter()
            .map(|r| timed(&format!("{claim}:{r}"), || sn_projection_table(r)))
            .collect(),
        "invol-projection-table" => ranks
            .into_iter()
            .map(|r| timed(&format!("{claim}:{r}"), || invol_projection_table(r)))
            .collect(),
        "double-quotient-moebius" => Ok(vec![timed(claim, double_quotient_moebius)?]),
        "product-decomposition" => Ok(vec![timed(claim, product_decomposition)?]),
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}
