use super::{RankingKind, RankingVector};
use crate::error::{Error, Result};
use crate::network::GoNetwork;

fn normalize_l2(v: &mut [f64]) -> Result<()> {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::Empty("HITS on a network without edges".into()));
    }
    for x in v {
        *x /= norm;
    }
    Ok(())
}

fn l2_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

/// Hubs and authorities: `authority(v) = sum over u -> v of w * hub(u)`,
/// `hub(u) = sum over u -> v of w * authority(v)`, both renormalized in L2
/// each step. Returns `(hubs, authorities)`, each L1-normalized.
///
/// With `weighted == false` every link counts once.
pub fn hits(
    net: &GoNetwork,
    weighted: bool,
    tol: f64,
    max_iter: usize,
) -> Result<(RankingVector, RankingVector)> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = net.n_vertices();
    let edges: Vec<(usize, usize, f64)> = net
        .edges
        .iter()
        .map(|(&(a, b), &w)| (a as usize, b as usize, if weighted { w as f64 } else { 1.0 }))
        .collect();
    if edges.is_empty() {
        return Err(Error::Empty("HITS on a network without edges".into()));
    }

    let mut hubs = vec![1.0; n];
    normalize_l2(&mut hubs)?;
    let mut auth = vec![0.0; n];
    let mut change = f64::INFINITY;
    for it in 1..=max_iter {
        let mut next_auth = vec![0.0; n];
        for &(a, b, w) in &edges {
            next_auth[b] += w * hubs[a];
        }
        normalize_l2(&mut next_auth)?;
        let mut next_hubs = vec![0.0; n];
        for &(a, b, w) in &edges {
            next_hubs[a] += w * next_auth[b];
        }
        normalize_l2(&mut next_hubs)?;

        change = l2_distance(&next_auth, &auth) + l2_distance(&next_hubs, &hubs);
        auth = next_auth;
        hubs = next_hubs;
        if change < tol {
            return Ok((
                RankingVector::new(RankingKind::Hub, hubs, it),
                RankingVector::new(RankingKind::Authority, auth, it),
            ));
        }
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        residual: change,
    })
}
