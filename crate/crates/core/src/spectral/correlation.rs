use serde::Serialize;

use super::RankingVector;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankPair {
    pub vertex: u16,
    /// PageRank rank.
    pub k: u32,
    /// CheiRank rank.
    pub k_star: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankCorrelation {
    pub points: Vec<RankPair>,
    pub kendall_tau: f64,
}

/// Per-vertex `(K, K*)` scatter of two rankings plus Kendall's tau.
pub fn rank_correlation(pagerank: &RankingVector, cheirank: &RankingVector) -> Result<RankCorrelation> {
    if pagerank.ranks.len() != cheirank.ranks.len() {
        return Err(Error::InvalidArgument(format!(
            "rankings differ in length: {} vs {}",
            pagerank.ranks.len(),
            cheirank.ranks.len()
        )));
    }
    let points = pagerank
        .ranks
        .iter()
        .zip(&cheirank.ranks)
        .enumerate()
        .map(|(v, (&k, &k_star))| RankPair {
            vertex: v as u16,
            k,
            k_star,
        })
        .collect();
    Ok(RankCorrelation {
        points,
        kendall_tau: kendall_tau(&pagerank.ranks, &cheirank.ranks),
    })
}

/// Kendall's tau between two permutations, in O(n log n) by counting
/// inversions with a merge sort.
pub fn kendall_tau(a: &[u32], b: &[u32]) -> f64 {
    let n = a.len();
    if n < 2 {
        return 1.0;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by_key(|&i| a[i]);
    let mut seq: Vec<u32> = idx.iter().map(|&i| b[i]).collect();
    let mut buf = vec![0; n];
    let inversions = merge_count(&mut seq, &mut buf);
    let pairs = (n * (n - 1) / 2) as f64;
    1.0 - 2.0 * inversions as f64 / pairs
}

fn merge_count(v: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = v.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = merge_count(&mut v[..mid], &mut buf[..mid]) + merge_count(&mut v[mid..], &mut buf[mid..]);
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < n {
        if v[i] <= v[j] {
            buf[k] = v[i];
            i += 1;
        } else {
            buf[k] = v[j];
            count += (mid - i) as u64;
            j += 1;
        }
        k += 1;
    }
    buf[k..k + mid - i].copy_from_slice(&v[i..mid]);
    let k2 = k + mid - i;
    buf[k2..n].copy_from_slice(&v[j..n]);
    v.copy_from_slice(&buf[..n]);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_and_reversed() {
        let a: Vec<u32> = (1..=50).collect();
        let rev: Vec<u32> = a.iter().rev().copied().collect();
        assert_eq!(kendall_tau(&a, &a), 1.0);
        assert_eq!(kendall_tau(&a, &rev), -1.0);
    }

    #[test]
    fn small_by_hand() {
        // pairs (1,2),(2,1),(3,3): one discordant of three
        assert!((kendall_tau(&[1, 2, 3], &[2, 1, 3]) - 1.0 / 3.0).abs() < 1e-15);
    }
}
