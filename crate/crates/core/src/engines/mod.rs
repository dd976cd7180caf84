//! Formula-based counting: edge-level weights, transfer matrices over the
//! series ring, closed forms and classical series.

mod closed;
mod literature;
mod matrix;
mod psi;
mod transfer;

pub use closed::{
    faceoff_count, faceoff_ogf, graded_31_egf, graded_semiorder_assembled_ogf, graded_semiorder_height_ogf,
    graded_semiorder_ogf, graded_semiorder_seed_ogf,
};
pub use literature::KnownSeries;
pub use matrix::{neumann_row, SeriesMatrix};
pub use psi::{
    bivariate_psi, count_edge_levels, psi_22, psi_22_direct, psi_normalized, psi_s, psi_s_direct, psi_w, stirling2,
    strong_from_weak, two_two_closed_form, PsiKind,
};
pub use transfer::{
    all_graded_egf, all_graded_egf_with_dim, graded_interval_egf, graded_interval_egf_with_dim,
    interval_graded_matrix_entry, weakly_graded_egf, weakly_graded_egf_with_dim,
};
