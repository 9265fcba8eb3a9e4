//! Ranking vectors and spectra of the move network.
//!
//! The Google matrix is column-stochastic: column `j` holds the transition
//! probabilities out of vertex `j`, so an edge `a -> b` of weight `w`
//! contributes `w / out_weight(a)` at row `b`, column `a`.

mod correlation;
mod eigen;
mod google;
mod hits;

use serde::Serialize;

pub use correlation::{kendall_tau, rank_correlation, RankCorrelation, RankPair};
pub use eigen::{
    full_spectrum, lambda_c, localization_profile, top_entries, Eigenpair, SpectralReport,
    TopEntry,
};
pub use faer::c64;
pub use google::{cheirank, pagerank, GoogleMatrix};
pub use hits::hits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RankingKind {
    PageRank,
    CheiRank,
    Hub,
    Authority,
}

/// A nonnegative score per vertex, summing to one, with the induced ranks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankingVector {
    pub kind: RankingKind,
    pub values: Vec<f64>,
    /// `ranks[v]` is the 1-based rank of vertex `v` (ties by ascending id).
    pub ranks: Vec<u32>,
    /// Vertex ids in rank order.
    pub order: Vec<u16>,
    /// Iterations used by the solver.
    pub iterations: usize,
}

impl RankingVector {
    pub(crate) fn new(kind: RankingKind, mut values: Vec<f64>, iterations: usize) -> Self {
        let total: f64 = values.iter().sum();
        for v in &mut values {
            *v /= total;
        }
        let order = order_by_descending(&values);
        let mut ranks = vec![0; values.len()];
        for (r, &v) in order.iter().enumerate() {
            ranks[v as usize] = r as u32 + 1;
        }
        RankingVector {
            kind,
            values,
            ranks,
            order,
            iterations,
        }
    }
}

/// Indices by descending value, ties by ascending index.
pub(crate) fn order_by_descending(values: &[f64]) -> Vec<u16> {
    let mut order: Vec<u16> = (0..values.len() as u16).collect();
    order.sort_by(|&a, &b| {
        values[b as usize]
            .total_cmp(&values[a as usize])
            .then(a.cmp(&b))
    });
    order
}
