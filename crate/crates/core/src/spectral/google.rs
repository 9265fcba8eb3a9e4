use faer::Mat;

use super::{RankingKind, RankingVector};
use crate::error::{Error, Result};
use crate::network::GoNetwork;

/// `G = alpha * S + (1 - alpha) / n`, where `S` is the column-normalized
/// weighted adjacency with empty (dangling) columns made uniform.
///
/// Stored sparsely; [`GoogleMatrix::entry`] and [`GoogleMatrix::to_dense`]
/// give the dense view.
#[derive(Debug, Clone)]
pub struct GoogleMatrix {
    n: usize,
    alpha: f64,
    /// Per column: `(row, S_row_col)` for the non-dangling columns.
    columns: Vec<Vec<(usize, f64)>>,
    dangling: Vec<bool>,
}

impl GoogleMatrix {
    pub fn build(net: &GoNetwork, alpha: f64) -> Result<GoogleMatrix> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "alpha must lie in (0, 1], got {alpha}"
            )));
        }
        let n = net.n_vertices();
        let mut columns: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
        let mut out_weight = vec![0u64; n];
        for (&(a, b), &w) in &net.edges {
            columns[a as usize].push((b as usize, w as f64));
            out_weight[a as usize] += w;
        }
        for (col, &total) in columns.iter_mut().zip(&out_weight) {
            for entry in col.iter_mut() {
                entry.1 /= total as f64;
            }
        }
        let dangling = out_weight.iter().map(|&w| w == 0).collect();
        Ok(GoogleMatrix {
            n,
            alpha,
            columns,
            dangling,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn is_dangling(&self, col: usize) -> bool {
        self.dangling[col]
    }

    /// `S_ij` before damping.
    fn s(&self, i: usize, j: usize) -> f64 {
        if self.dangling[j] {
            1.0 / self.n as f64
        } else {
            self.columns[j]
                .iter()
                .find(|(r, _)| *r == i)
                .map_or(0.0, |e| e.1)
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.alpha * self.s(i, j) + (1.0 - self.alpha) / self.n as f64
    }

    pub fn to_dense(&self) -> Mat<f64> {
        let n = self.n;
        let teleport = (1.0 - self.alpha) / n as f64;
        let uniform = self.alpha * (1.0 / n as f64) + teleport;
        let mut m = Mat::<f64>::zeros(n, n);
        for j in 0..n {
            if self.dangling[j] {
                for i in 0..n {
                    m[(i, j)] = uniform;
                }
            } else {
                for i in 0..n {
                    m[(i, j)] = teleport;
                }
                for &(i, s) in &self.columns[j] {
                    m[(i, j)] += self.alpha * s;
                }
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    /// `G x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n as f64;
        let total: f64 = x.iter().sum();
        let dangling_mass: f64 = x
            .iter()
            .zip(&self.dangling)
            .filter(|(_, &d)| d)
            .map(|(v, _)| v)
            .sum();
        let base = self.alpha * dangling_mass / n + (1.0 - self.alpha) * total / n;
        let mut y = vec![base; self.n];
        for (j, col) in self.columns.iter().enumerate() {
            let xj = x[j];
            if xj == 0.0 {
                continue;
            }
            for &(i, s) in col {
                y[i] += self.alpha * s * xj;
            }
        }
        y
    }
}

/// Dominant right eigenvector of `G` by power iteration from the uniform
/// vector, L1-renormalized each step, stopping when successive iterates
/// differ by less than `tol` in L1.
pub fn pagerank(g: &GoogleMatrix, tol: f64, max_iter: usize) -> Result<RankingVector> {
    power_iteration(g, tol, max_iter).map(|(p, it)| RankingVector::new(RankingKind::PageRank, p, it))
}

/// PageRank of the network with every link reversed.
pub fn cheirank(net: &GoNetwork, alpha: f64, tol: f64, max_iter: usize) -> Result<RankingVector> {
    let g = GoogleMatrix::build(&net.transpose(), alpha)?;
    power_iteration(&g, tol, max_iter).map(|(p, it)| RankingVector::new(RankingKind::CheiRank, p, it))
}

fn power_iteration(g: &GoogleMatrix, tol: f64, max_iter: usize) -> Result<(Vec<f64>, usize)> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::Empty("network has no vertices".into()));
    }
    let mut p = vec![1.0 / n as f64; n];
    let mut residual = f64::INFINITY;
    for it in 1..=max_iter {
        let mut next = g.apply(&p);
        let norm: f64 = next.iter().sum();
        for v in &mut next {
            *v /= norm;
        }
        residual = next.iter().zip(&p).map(|(a, b)| (a - b).abs()).sum();
        p = next;
        if residual < tol {
            return Ok((p, it));
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        residual,
    })
}
