use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bruhat::bruhat_group;
use super::involutions::involution_poset;
use super::perm::GenSet;
use crate::analysis::is_projection;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// `Q^I P^J` on `S_{n+1}`, over all pairs `(I, J)`.
    Group,
    /// `P̂^J` on `Invol(S_{n+1})`, over all `J`.
    Involutions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionRow {
    /// Empty for the involution table.
    pub i: GenSet,
    pub j: GenSet,
    pub projection: bool,
    /// Value predicted by the closed-form characterisation.
    pub expected: bool,
    /// Whether the image is graded by the ambient rank; recorded, not asserted.
    pub image_graded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionTable {
    /// Number of generators; the group is `S_{rank+1}`.
    pub rank: usize,
    pub kind: TableKind,
    pub rows: Vec<ProjectionRow>,
}

impl ProjectionTable {
    pub fn matches(&self) -> bool {
        self.rows.iter().all(|r| r.projection == r.expected)
    }

    pub fn mismatches(&self) -> Vec<&ProjectionRow> {
        self.rows
            .iter()
            .filter(|r| r.projection != r.expected)
            .collect()
    }

    /// Rows whose idempotent is a projection.
    pub fn projections(&self) -> Vec<(GenSet, GenSet)> {
        self.rows
            .iter()
            .filter(|r| r.projection)
            .map(|r| (r.i, r.j))
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let width = 2 * self.rank + 3;
        for r in &self.rows {
            let yn = |b: bool| if b { "yes" } else { "no" };
            if self.kind == TableKind::Group {
                let _ = write!(out, "I={:<width$} ", r.i.to_string());
            }
            let _ = writeln!(
                out,
                "J={:<width$} projection={:<3} expected={:<3} graded={}",
                r.j.to_string(),
                yn(r.projection),
                yn(r.expected),
                yn(r.image_graded)
            );
        }
        out
    }
}

/// `[k] = {1, …, k}` or `[k, n] = {k, …, n}` for some `k`.
fn is_initial_or_final(s: GenSet, rank: usize) -> bool {
    (1..=rank).any(|k| s == GenSet::range(1, k) || s == GenSet::range(k, rank))
}

fn is_trivial(s: GenSet, rank: usize) -> bool {
    s.is_empty() || s == GenSet::full(rank)
}

/// `Q^I P^J` is a projection iff `I ∩ J ∈ {I, J}` and `I, J` are initial or
/// final segments of `[n]`; pairs with `I` or `J` in `{∅, [n]}` are always
/// projections (`Q^∅ P^J = P^J`, and `P^{[n]}` is constant).
pub fn group_closed_form(i: GenSet, j: GenSet, rank: usize) -> bool {
    if is_trivial(i, rank) || is_trivial(j, rank) {
        return true;
    }
    let meet = i.intersection(j);
    (meet == i || meet == j) && is_initial_or_final(i, rank) && is_initial_or_final(j, rank)
}

/// `P̂^J` is a projection iff `J` is a singleton or an initial or final segment
/// of `[n]`, or `J ∈ {∅, [n]}`.
pub fn involution_closed_form(j: GenSet, rank: usize) -> bool {
    is_trivial(j, rank) || j.len() == 1 || is_initial_or_final(j, rank)
}

fn subsets(rank: usize) -> Vec<GenSet> {
    (0..1u32 << rank)
        .map(|b| GenSet::from_bits(b << 1))
        .collect()
}

/// Projection status of every `Q^I P^J` (group kind) or `P̂^J` (involution
/// kind) for generators `[rank]`, next to the closed-form prediction.
pub fn projection_tables(rank: usize, kind: TableKind) -> Result<ProjectionTable> {
    let rows = match kind {
        TableKind::Group => {
            let g = bruhat_group(rank + 1)?;
            let pairs: Vec<(GenSet, GenSet)> = subsets(rank)
                .into_iter()
                .flat_map(|i| subsets(rank).into_iter().map(move |j| (i, j)))
                .collect();
            pairs
                .into_par_iter()
                .map(|(i, j)| {
                    let e = g.qp(i, j);
                    Ok(ProjectionRow {
                        i,
                        j,
                        projection: is_projection(&e)?,
                        expected: group_closed_form(i, j, rank),
                        image_graded: g.poset().induced_graded_with_rank(&e.image_set()).is_ok(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
        TableKind::Involutions => {
            let inv = involution_poset(rank + 1)?;
            subsets(rank)
                .into_par_iter()
                .map(|j| {
                    let e = inv.hat_projection(j)?;
                    Ok(ProjectionRow {
                        i: GenSet::EMPTY,
                        j,
                        projection: is_projection(&e)?,
                        expected: involution_closed_form(j, rank),
                        image_graded: inv.poset().induced_graded_with_rank(&e.image_set()).is_ok(),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(ProjectionTable { rank, kind, rows })
}
