use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{c64, order_by_descending, GoogleMatrix};
use crate::error::{Error, Result};
use crate::plaquette::ClassTable;

fn serialize_complex<S: Serializer>(z: &c64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

fn serialize_complex_vec<S: Serializer>(v: &[c64], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for z in v {
        seq.serialize_element(&[z.re, z.im])?;
    }
    seq.end()
}

/// A right eigenvector normalized to unit squared modulus, with its phase
/// fixed so that the largest-modulus entry is real and positive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenpair {
    #[serde(serialize_with = "serialize_complex")]
    pub value: c64,
    #[serde(serialize_with = "serialize_complex_vec")]
    pub vector: Vec<c64>,
}

impl Eigenpair {
    /// `|psi_i|^2` for every vertex; sums to one.
    pub fn weights(&self) -> Vec<f64> {
        self.vector.iter().map(|z| z.norm_sqr()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    /// All eigenvalues by descending modulus, then descending real part,
    /// then descending imaginary part.
    #[serde(serialize_with = "serialize_complex_vec")]
    pub eigenvalues: Vec<c64>,
    /// Right eigenvectors of the leading eigenvalues, in the same order.
    pub eigenvectors: Vec<Eigenpair>,
}

fn spectral_order(a: &c64, b: &c64) -> std::cmp::Ordering {
    b.norm()
        .total_cmp(&a.norm())
        .then(b.re.total_cmp(&a.re))
        .then(b.im.total_cmp(&a.im))
}

fn normalize_eigenvector(mut v: Vec<c64>) -> Vec<c64> {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let pivot = v
        .iter()
        .enumerate()
        .fold((0, -1.0), |best, (i, z)| {
            let m = z.norm();
            if m > best.1 {
                (i, m)
            } else {
                best
            }
        })
        .0;
    let p = v[pivot];
    let phase = p.conj() / p.norm();
    for z in &mut v {
        *z = *z * phase / norm;
    }
    v[pivot].im = 0.0;
    v
}

/// Dense eigendecomposition of the Google matrix, with right eigenvectors
/// for the `m` largest-modulus eigenvalues.
///
/// The sum of the eigenvalues is checked against the trace.
pub fn full_spectrum(g: &GoogleMatrix, m: usize) -> Result<SpectralReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Empty("empty matrix".into()));
    }
    let dense = g.to_dense();
    let (values, vectors) = if m == 0 {
        let values = dense
            .eigenvalues()
            .map_err(|e| Error::Numerical(format!("eigensolver failed: {e:?}")))?;
        (values, None)
    } else {
        let evd = dense
            .eigen()
            .map_err(|e| Error::Numerical(format!("eigensolver failed: {e:?}")))?;
        let s = evd.S();
        let values: Vec<c64> = (0..n).map(|i| s[i]).collect();
        (values, Some(evd))
    };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| spectral_order(&values[a], &values[b]).then(a.cmp(&b)));
    let eigenvalues: Vec<c64> = order.iter().map(|&i| values[i]).collect();

    let sum: f64 = eigenvalues.iter().map(|z| z.re).sum();
    let trace = g.trace();
    if (sum - trace).abs() > 1e-6 {
        return Err(Error::Numerical(format!(
            "eigenvalue sum {sum} differs from trace {trace}"
        )));
    }

    let eigenvectors = match vectors {
        None => Vec::new(),
        Some(evd) => {
            let u = evd.U();
            order
                .iter()
                .take(m.min(n))
                .map(|&col| Eigenpair {
                    value: values[col],
                    vector: normalize_eigenvector((0..n).map(|i| u[(i, col)]).collect()),
                })
                .collect()
        }
    };
    Ok(SpectralReport {
        eigenvalues,
        eigenvectors,
    })
}

/// For each percentage `p`, the radius `r` such that at least
/// `floor(p n / 100)` of the `n` eigenvalues (at least one) satisfy
/// `|lambda| <= r`: the modulus of that order statistic. The leading
/// eigenvalue is part of the population.
pub fn lambda_c(eigenvalues: &[c64], percents: &[f64]) -> Result<Vec<(f64, f64)>> {
    if eigenvalues.is_empty() {
        return Err(Error::Empty("no eigenvalues".into()));
    }
    let mut moduli: Vec<f64> = eigenvalues.iter().map(|z| z.norm()).collect();
    moduli.sort_by(f64::total_cmp);
    let n = moduli.len();
    percents
        .iter()
        .map(|&p| {
            if !(p > 0.0 && p < 100.0) {
                return Err(Error::InvalidArgument(format!(
                    "percentile must lie in (0, 100), got {p}"
                )));
            }
            let k = ((p * n as f64 / 100.0) + 1e-9).floor().max(1.0) as usize;
            Ok((p, moduli[k.min(n) - 1]))
        })
        .collect()
}

/// `|psi|^2` (normalized over all entries) at the `len` most frequent
/// vertices, most frequent first.
pub fn localization_profile(eigvec: &[c64], freq_order: &[u16], len: usize) -> Vec<f64> {
    let total: f64 = eigvec.iter().map(|z| z.norm_sqr()).sum();
    freq_order
        .iter()
        .take(len)
        .map(|&v| eigvec[v as usize].norm_sqr() / total)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TopEntry {
    pub class_id: u16,
    pub weight: f64,
    pub diagram: String,
}

/// The `k` vertices with the largest `|psi|^2`, ties by ascending id.
pub fn top_entries(eigvec: &[c64], k: usize, table: &ClassTable) -> Vec<TopEntry> {
    let total: f64 = eigvec.iter().map(|z| z.norm_sqr()).sum();
    let weights: Vec<f64> = eigvec.iter().map(|z| z.norm_sqr() / total).collect();
    order_by_descending(&weights)
        .into_iter()
        .take(k)
        .map(|v| TopEntry {
            class_id: v,
            weight: weights[v as usize],
            diagram: table
                .get(v)
                .map(|c| c.render_ascii())
                .unwrap_or_default(),
        })
        .collect()
}
