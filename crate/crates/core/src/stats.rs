//! Frequency and graph statistics: ranked (Zipf) distributions of moves and
//! move sequences, the comparison variants C1-C3, the distance
//! distribution, integrated degree distributions, clustering coefficients
//! and log-log slope fits.
//!
//! "Integrated" always means the normalized tail sum: for a ranked
//! distribution `integrated[r] = sum(counts[r..]) / sum(counts)`, and for a
//! degree sequence the fraction of vertices with degree strictly above `k`.

use std::collections::HashMap;
use std::hash::Hash;

use serde::Serialize;

use crate::coord::{chebyshev, Coord};
use crate::error::{Error, Result};
use crate::network::{build_network, GameEvents, GoNetwork, MoveEvent, NetworkConfig};

/// Something that can label a rank in a CSV file.
pub trait Label: Ord + Clone + Hash {
    fn render(&self) -> String;
}

impl Label for u16 {
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Label for Vec<u16> {
    fn render(&self) -> String {
        self.iter().map(u16::to_string).collect::<Vec<_>>().join(" ")
    }
}

impl Label for Vec<Coord> {
    fn render(&self) -> String {
        self.iter().map(Coord::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// Offset from one move to the next, `(dh, dv)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Displacement {
    pub dh: i8,
    pub dv: i8,
}

impl Displacement {
    pub fn between(a: Coord, b: Coord) -> Displacement {
        Displacement {
            dh: b.h() as i8 - a.h() as i8,
            dv: b.v() as i8 - a.v() as i8,
        }
    }
}

impl Label for Vec<Displacement> {
    fn render(&self) -> String {
        self.iter()
            .map(|d| format!("({};{})", d.dh, d.dv))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Items sorted by descending count (ties by ascending label) with the
/// normalized tail sum alongside.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedDistribution<L> {
    pub labels: Vec<L>,
    pub counts: Vec<u64>,
    pub integrated: Vec<f64>,
}

impl<L: Label> RankedDistribution<L> {
    /// Zero counts are dropped.
    pub fn from_counts(counts: impl IntoIterator<Item = (L, u64)>) -> Self {
        let mut items: Vec<(L, u64)> = counts.into_iter().filter(|(_, c)| *c > 0).collect();
        items.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let total: u64 = items.iter().map(|(_, c)| c).sum();
        let mut integrated = vec![0.0; items.len()];
        let mut tail = 0u64;
        for (i, (_, c)) in items.iter().enumerate().rev() {
            tail += c;
            integrated[i] = tail as f64 / total as f64;
        }
        let (labels, counts) = items.into_iter().unzip();
        RankedDistribution {
            labels,
            counts,
            integrated,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Count normalized by the total, per rank.
    pub fn frequencies(&self) -> Vec<f64> {
        let total = self.total() as f64;
        self.counts.iter().map(|&c| c as f64 / total).collect()
    }

    /// Rows `(rank, label, count, integrated)`, ranks from 1.
    pub fn rows(&self) -> impl Iterator<Item = (usize, String, u64, f64)> + '_ {
        (0..self.len()).map(|i| {
            (
                i + 1,
                self.labels[i].render(),
                self.counts[i],
                self.integrated[i],
            )
        })
    }
}

fn tally<L: Eq + Hash>(items: impl IntoIterator<Item = L>) -> HashMap<L, u64> {
    let mut map = HashMap::new();
    for item in items {
        *map.entry(item).or_insert(0) += 1;
    }
    map
}

/// Per-class occurrence counts (typically a network's `vertex_counts`)
/// ranked by frequency.
pub fn move_frequency(vertex_counts: &[u64]) -> Result<RankedDistribution<u16>> {
    if vertex_counts.iter().all(|&c| c == 0) {
        return Err(Error::Empty("no moves in corpus".into()));
    }
    Ok(RankedDistribution::from_counts(
        vertex_counts.iter().enumerate().map(|(i, &c)| (i as u16, c)),
    ))
}

/// Per-class counts straight from replayed games.
pub fn class_counts(games: &[GameEvents], n_vertices: usize) -> Vec<u64> {
    let mut counts = vec![0; n_vertices];
    for e in games.iter().flat_map(|g| &g.events) {
        counts[e.class_id as usize] += 1;
    }
    counts
}

/// Windows of `len` events in which every adjacent pair satisfies `linked`.
fn linked_windows<'a>(
    games: &'a [GameEvents],
    len: usize,
    linked: impl Fn(&MoveEvent, &MoveEvent) -> bool + 'a,
) -> impl Iterator<Item = &'a [MoveEvent]> + 'a {
    games.iter().flat_map(move |g| {
        // run[i]: number of events ending at i forming a linked chain
        let mut run = vec![1usize; g.events.len()];
        for i in 1..g.events.len() {
            if linked(&g.events[i - 1], &g.events[i]) {
                run[i] = run[i - 1] + 1;
            }
        }
        (0..g.events.len())
            .filter(move |&i| run[i] >= len)
            .map(move |i| &g.events[i + 1 - len..=i])
    })
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("sequence length must be at least 2, got {k}")));
    }
    Ok(())
}

/// k-tuples of classes along chains of consecutive moves that stay within
/// distance `d` at every step. Windows overlap.
pub fn sequence_frequency(
    games: &[GameEvents],
    k: usize,
    d: u32,
) -> Result<RankedDistribution<Vec<u16>>> {
    check_k(k)?;
    let windows = linked_windows(games, k, |a, b| a.links_to(b, d));
    Ok(RankedDistribution::from_counts(tally(
        windows.map(|w| w.iter().map(|e| e.class_id).collect::<Vec<_>>()),
    )))
}

/// C1: moves are board points, sequences are k immediately consecutive
/// moves regardless of distance.
pub fn variant_c1(games: &[GameEvents], k: usize) -> Result<RankedDistribution<Vec<Coord>>> {
    check_k(k)?;
    let windows = linked_windows(games, k, |a, b| b.ply == a.ply + 1);
    Ok(RankedDistribution::from_counts(tally(
        windows.map(|w| w.iter().map(|e| e.at).collect::<Vec<_>>()),
    )))
}

/// C2: moves are board points, and the successor of `a` is the first later
/// move of the game within distance `d` of `a`.
pub fn variant_c2(games: &[GameEvents], k: usize, d: u32) -> Result<RankedDistribution<Vec<Coord>>> {
    check_k(k)?;
    let mut counts = HashMap::new();
    for g in games {
        let ev = &g.events;
        let next: Vec<Option<usize>> = (0..ev.len())
            .map(|i| (i + 1..ev.len()).find(|&j| chebyshev(ev[i].at, ev[j].at) <= d))
            .collect();
        for start in 0..ev.len() {
            let mut seq = vec![ev[start].at];
            let mut cur = start;
            while seq.len() < k {
                match next[cur] {
                    Some(j) => {
                        seq.push(ev[j].at);
                        cur = j;
                    }
                    None => break,
                }
            }
            if seq.len() == k {
                *counts.entry(seq).or_insert(0) += 1;
            }
        }
    }
    Ok(RankedDistribution::from_counts(counts))
}

/// C3: k-tuples of displacement vectors between consecutive moves, taken
/// along chains of k+1 moves linked within distance `d`.
pub fn variant_c3(
    games: &[GameEvents],
    k: usize,
    d: u32,
) -> Result<RankedDistribution<Vec<Displacement>>> {
    if k < 1 {
        return Err(Error::InvalidArgument("need at least one displacement".into()));
    }
    let windows = linked_windows(games, k + 1, |a, b| a.links_to(b, d));
    Ok(RankedDistribution::from_counts(tally(windows.map(|w| {
        w.windows(2)
            .map(|p| Displacement::between(p[0].at, p[1].at))
            .collect::<Vec<_>>()
    }))))
}

/// Distribution of Chebyshev distances between consecutive moves.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceHistogram {
    /// `counts[d]` for d = 0..=18.
    pub counts: Vec<u64>,
    pub probabilities: Vec<f64>,
}

pub fn distance_distribution(games: &[GameEvents]) -> Result<DistanceHistogram> {
    let mut counts = vec![0u64; 19];
    for g in games {
        for (a, b) in g.consecutive_pairs() {
            counts[chebyshev(a.at, b.at) as usize] += 1;
        }
    }
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return Err(Error::Empty("no consecutive move pairs".into()));
    }
    let probabilities = counts.iter().map(|&c| c as f64 / total as f64).collect();
    Ok(DistanceHistogram {
        counts,
        probabilities,
    })
}

/// One point of an integrated degree curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub k: u64,
    /// `k / k_max`.
    pub x: f64,
    /// Fraction of all vertices whose degree exceeds `k`.
    pub fraction: f64,
}

/// Fraction of vertices with degree above `k`, evaluated at `k = 0` and at
/// every observed degree below the maximum.
pub fn integrated_curve(degrees: &[u64]) -> Vec<CurvePoint> {
    let n = degrees.len() as f64;
    let k_max = degrees.iter().copied().max().unwrap_or(0);
    if k_max == 0 {
        return Vec::new();
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let mut ks: Vec<u64> = sorted.iter().copied().filter(|&k| k < k_max).collect();
    ks.push(0);
    ks.sort_unstable();
    ks.dedup();
    ks.into_iter()
        .map(|k| {
            let above = sorted.len() - sorted.partition_point(|&x| x <= k);
            CurvePoint {
                k,
                x: k as f64 / k_max as f64,
                fraction: above as f64 / n,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeDistributions {
    /// Distinct in-links per vertex (self-loops included).
    pub in_degree: Vec<u64>,
    pub out_degree: Vec<u64>,
    /// Summed weights of in-links, for inspection.
    pub weighted_in: Vec<u64>,
    pub weighted_out: Vec<u64>,
    pub in_curve: Vec<CurvePoint>,
    pub out_curve: Vec<CurvePoint>,
}

pub fn degree_distributions(net: &GoNetwork) -> DegreeDistributions {
    let n = net.n_vertices();
    let mut in_degree = vec![0; n];
    let mut out_degree = vec![0; n];
    let mut weighted_in = vec![0; n];
    let mut weighted_out = vec![0; n];
    for (&(a, b), &w) in &net.edges {
        out_degree[a as usize] += 1;
        in_degree[b as usize] += 1;
        weighted_out[a as usize] += w;
        weighted_in[b as usize] += w;
    }
    DegreeDistributions {
        in_curve: integrated_curve(&in_degree),
        out_curve: integrated_curve(&out_degree),
        in_degree,
        out_degree,
        weighted_in,
        weighted_out,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Clustering {
    /// Mean over vertices with at least two neighbors.
    pub average: f64,
    /// `None` for vertices with fewer than two neighbors.
    pub per_vertex: Vec<Option<f64>>,
}

/// Clustering coefficient of the underlying simple undirected graph
/// (directions, weights and self-loops discarded).
pub fn clustering_coefficient(net: &GoNetwork) -> Result<Clustering> {
    let n = net.n_vertices();
    let words = n.div_ceil(64);
    let mut adj = vec![0u64; n * words];
    let mut set = |a: usize, b: usize| adj[a * words + b / 64] |= 1 << (b % 64);
    for &(a, b) in net.edges.keys() {
        if a != b {
            set(a as usize, b as usize);
            set(b as usize, a as usize);
        }
    }
    let row = |v: usize| &adj[v * words..(v + 1) * words];

    let mut per_vertex = vec![None; n];
    let mut sum = 0.0;
    let mut counted = 0usize;
    for (i, slot) in per_vertex.iter_mut().enumerate() {
        let ri = row(i);
        let deg: u32 = ri.iter().map(|w| w.count_ones()).sum();
        if deg < 2 {
            continue;
        }
        let mut twice_links = 0u64;
        for (wi, &word) in ri.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let j = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                twice_links += row(j)
                    .iter()
                    .zip(ri)
                    .map(|(a, b)| (a & b).count_ones() as u64)
                    .sum::<u64>();
            }
        }
        let deg = deg as f64;
        let cc = (twice_links as f64 / 2.0) / (deg * (deg - 1.0) / 2.0);
        *slot = Some(cc);
        sum += cc;
        counted += 1;
    }
    if counted == 0 {
        return Err(Error::Empty("no vertex has two or more neighbors".into()));
    }
    Ok(Clustering {
        average: sum / counted as f64,
        per_vertex,
    })
}

/// Average clustering of the network built from the first `n_g` games,
/// for each checkpoint.
pub fn cc_vs_games(
    games: &[GameEvents],
    n_vertices: usize,
    config: NetworkConfig,
    checkpoints: &[usize],
) -> Result<Vec<(usize, f64)>> {
    if checkpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("checkpoints must be strictly ascending".into()));
    }
    if let Some(&last) = checkpoints.last() {
        if last > games.len() {
            return Err(Error::InvalidArgument(format!(
                "checkpoint {last} exceeds corpus of {} games",
                games.len()
            )));
        }
    }
    let mut net = build_network(&[], n_vertices, config);
    let mut done = 0;
    let mut out = Vec::with_capacity(checkpoints.len());
    for &n_g in checkpoints {
        for g in &games[done..n_g] {
            net.add_game(g);
        }
        done = n_g;
        out.push((n_g, clustering_coefficient(&net)?.average));
    }
    Ok(out)
}

/// Least-squares line through `(log10 x, log10 y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub intercept: f64,
    /// Smallest and largest x actually fitted (ranks for ranked data).
    pub fit_range: [f64; 2],
    /// Root-mean-square residual in log10 units.
    pub residual: f64,
    pub n_points: usize,
}

/// Fit over the points with positive coordinates; at least three needed.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<SlopeFit> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|&(x, y)| (x.log10(), y.log10()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "slope fit needs at least 3 positive points, got {}",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument("slope fit needs distinct x values".into()));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = (pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum::<f64>()
        / n)
        .sqrt();
    let xs = points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|p| p.0);
    let lo = xs.clone().fold(f64::INFINITY, f64::min);
    let hi = xs.fold(f64::NEG_INFINITY, f64::max);
    Ok(SlopeFit {
        slope,
        intercept,
        fit_range: [lo, hi],
        residual,
        n_points: pts.len(),
    })
}

/// Fit `values[rank - 1]` against rank over `rank_min..=rank_max` (1-based;
/// the upper bound is clipped to the available ranks).
pub fn fit_slope(values: &[f64], rank_min: usize, rank_max: usize) -> Result<SlopeFit> {
    let rank_min = rank_min.max(1);
    let rank_max = rank_max.min(values.len());
    if rank_min >= rank_max {
        return Err(Error::InvalidArgument(format!(
            "empty fit range [{rank_min}, {rank_max}]"
        )));
    }
    let points: Vec<(f64, f64)> = (rank_min..=rank_max)
        .map(|r| (r as f64, values[r - 1]))
        .collect();
    fit_loglog(&points)
}

/// Fit an integrated degree curve (`fraction` against `k / k_max`).
pub fn fit_curve(curve: &[CurvePoint]) -> Result<SlopeFit> {
    let points: Vec<(f64, f64)> = curve.iter().map(|p| (p.x, p.fraction)).collect();
    fit_loglog(&points)
}
