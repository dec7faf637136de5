//! Symmetric groups under Bruhat order: parabolic projections, 0-Hecke
//! products, involution posets and projection tables.

mod bruhat;
mod involutions;
mod perm;
mod tables;

pub use bruhat::{
    bruhat_group, bruhat_poset, coset_max, double_coset_top, parabolic_map, proj, BruhatGroup,
    QuotientSpec, Side, MAX_BRUHAT_N,
};
pub use involutions::{involution_poset, InvolutionElement, InvolutionPoset};
pub use perm::{min_left, min_right, parabolic_subgroup, w0, GenSet, Permutation};
pub use tables::{
    group_closed_form, involution_closed_form, projection_tables, ProjectionRow, ProjectionTable,
    TableKind,
};
