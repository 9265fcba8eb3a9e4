use gonet::spectral::{
    c64, cheirank, full_spectrum, hits, kendall_tau, lambda_c, localization_profile, pagerank,
    GoogleMatrix,
};
use gonet::GoNetwork;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_network(seed: u64, n: usize, density: f64) -> GoNetwork {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n as u16 {
        // leave a few vertices without out-links
        if rng.gen_bool(0.15) {
            continue;
        }
        for b in 0..n as u16 {
            if rng.gen_bool(density) {
                edges.push((a, b, rng.gen_range(1..20)));
            }
        }
    }
    GoNetwork::from_edges(n, &edges)
}

/// The Google matrix written out from its definition.
fn google_oracle(net: &GoNetwork, alpha: f64) -> DMatrix<f64> {
    let n = net.n_vertices();
    let mut out_w = vec![0.0; n];
    for (&(a, _), &w) in &net.edges {
        out_w[a as usize] += w as f64;
    }
    DMatrix::from_fn(n, n, |i, j| {
        let s = if out_w[j] == 0.0 {
            1.0 / n as f64
        } else {
            net.edges.get(&(j as u16, i as u16)).map_or(0.0, |&w| w as f64 / out_w[j])
        };
        alpha * s + (1.0 - alpha) / n as f64
    })
}

/// Stationary vector of a column-stochastic matrix by a direct solve of
/// `(G - I) p = 0` with the last equation replaced by `sum(p) = 1`.
fn stationary_oracle(g: &DMatrix<f64>) -> DVector<f64> {
    let n = g.nrows();
    let mut a = g - DMatrix::<f64>::identity(n, n);
    let mut b = DVector::zeros(n);
    for j in 0..n {
        a[(n - 1, j)] = 1.0;
    }
    b[n - 1] = 1.0;
    a.lu().solve(&b).unwrap()
}

fn networks() -> Vec<GoNetwork> {
    vec![
        random_network(1, 12, 0.3),
        random_network(2, 30, 0.1),
        random_network(3, 40, 0.05),
        GoNetwork::from_edges(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)]),
        GoNetwork::from_edges(5, &[(0, 0, 3), (1, 0, 1)]),
    ]
}

#[test]
fn google_matrix_matches_definition() {
    for net in networks() {
        for alpha in [1.0, 0.85, 0.5] {
            let g = GoogleMatrix::build(&net, alpha).unwrap();
            let oracle = google_oracle(&net, alpha);
            let dense = g.to_dense();
            for j in 0..g.n() {
                let mut col = 0.0;
                for i in 0..g.n() {
                    assert!((dense[(i, j)] - oracle[(i, j)]).abs() < 1e-15);
                    assert_eq!(dense[(i, j)], g.entry(i, j));
                    col += dense[(i, j)];
                }
                assert!((col - 1.0).abs() < 1e-12);
            }
        }
    }
}

/// Eigenvalues away from zero must match one to one; the cluster at zero
/// (often a defective eigenvalue, only determined to about eps^(1/k)) is
/// checked through its size and the power sums `sum(lambda^k) = tr(G^k)`.
#[test]
fn spectrum_matches_independent_solver() {
    for net in networks() {
        for alpha in [1.0, 0.85] {
            let g = GoogleMatrix::build(&net, alpha).unwrap();
            let ours = full_spectrum(&g, 0).unwrap().eigenvalues;
            let dense = google_oracle(&net, alpha);
            let theirs: Vec<c64> = dense
                .complex_eigenvalues()
                .iter()
                .map(|z| c64::new(z.re, z.im))
                .collect();
            assert_eq!(ours.len(), theirs.len());
            let cluster = |v: &[c64]| v.iter().filter(|z| z.norm() < 1e-3).count();
            assert_eq!(cluster(&ours), cluster(&theirs));

            let mut pool: Vec<c64> = theirs.into_iter().filter(|z| z.norm() >= 1e-3).collect();
            for z in ours.iter().filter(|z| z.norm() >= 1e-3) {
                let (k, dist) = pool
                    .iter()
                    .enumerate()
                    .map(|(k, w)| (k, (z - w).norm()))
                    .min_by(|a, b| a.1.total_cmp(&b.1))
                    .unwrap();
                assert!(dist < 1e-8, "{z} unmatched ({dist})");
                pool.swap_remove(k);
            }

            let mut power = dense.clone();
            for k in 1..=4 {
                let sum: c64 = ours.iter().map(|z| z.powu(k)).sum();
                assert!((sum.re - power.trace()).abs() < 1e-8, "k = {k}");
                assert!(sum.im.abs() < 1e-8);
                power = &power * &dense;
            }
        }
    }
}

#[test]
fn spectrum_invariants() {
    for net in networks() {
        let g = GoogleMatrix::build(&net, 1.0).unwrap();
        let report = full_spectrum(&g, 3).unwrap();
        let eig = &report.eigenvalues;
        assert!((eig[0] - c64::new(1.0, 0.0)).norm() < 1e-10);
        assert!(eig.iter().all(|z| z.norm() <= 1.0 + 1e-8));
        for z in eig.iter().filter(|z| z.im.abs() > 1e-8) {
            assert!(eig.iter().any(|w| (w - z.conj()).norm() < 1e-8), "no partner for {z}");
        }
        let sum: c64 = eig.iter().sum();
        assert!((sum.re - g.trace()).abs() < 1e-6);
        assert!(sum.im.abs() < 1e-6);
        for pair in &report.eigenvectors {
            let total: f64 = pair.weights().iter().sum();
            assert!((total - 1.0).abs() < 1e-12);
            // G psi = lambda psi
            let dense = g.to_dense();
            for i in 0..g.n() {
                let gi: c64 = (0..g.n()).map(|j| pair.vector[j] * dense[(i, j)]).sum();
                assert!((gi - pair.value * pair.vector[i]).norm() < 1e-8);
            }
            let order: Vec<u16> = (0..g.n() as u16).collect();
            let profile = localization_profile(&pair.vector, &order, g.n());
            assert!((profile.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn pagerank_matches_direct_solve_and_leading_eigenvector() {
    for net in networks().into_iter().take(3) {
        for alpha in [1.0, 0.85] {
            let g = GoogleMatrix::build(&net, alpha).unwrap();
            let pr = pagerank(&g, 1e-13, 100_000).unwrap();
            let oracle = stationary_oracle(&google_oracle(&net, alpha));
            for (a, b) in pr.values.iter().zip(oracle.iter()) {
                assert!((a - b).abs() < 1e-10);
            }
            let gp = g.apply(&pr.values);
            let resid: f64 = gp.iter().zip(&pr.values).map(|(a, b)| (a - b).abs()).sum();
            assert!(resid < 10.0 * 1e-13);

            let lead = &full_spectrum(&g, 1).unwrap().eigenvectors[0];
            let dot: f64 = lead.vector.iter().zip(&pr.values).map(|(z, p)| z.re * p).sum();
            let norm_p = pr.values.iter().map(|p| p * p).sum::<f64>().sqrt();
            let norm_v = lead.vector.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!(dot / (norm_p * norm_v) > 1.0 - 1e-8);
        }
    }
}

#[test]
fn cheirank_is_pagerank_of_transpose() {
    for net in networks() {
        let cr = cheirank(&net, 0.85, 1e-12, 100_000).unwrap();
        let pr_t = pagerank(&GoogleMatrix::build(&net.transpose(), 0.85).unwrap(), 1e-12, 100_000).unwrap();
        assert_eq!(cr.values, pr_t.values);
        assert_eq!(cr.ranks, pr_t.ranks);
    }
}

#[test]
fn hits_matches_symmetric_eigenvectors() {
    for seed in [5, 6, 7] {
        let net = random_network(seed, 20, 0.25);
        let n = net.n_vertices();
        let w = DMatrix::from_fn(n, n, |i, j| {
            net.edges.get(&(i as u16, j as u16)).map_or(0.0, |&x| x as f64)
        });
        let (hubs, auth) = hits(&net, true, 1e-14, 100_000).unwrap();
        for (m, ours) in [(&w * w.transpose(), &hubs), (w.transpose() * &w, &auth)] {
            let eig = m.symmetric_eigen();
            let top = eig.eigenvalues.imax();
            let v = eig.eigenvectors.column(top);
            let sign = if v.sum() < 0.0 { -1.0 } else { 1.0 };
            let l1: f64 = v.iter().map(|x| x * sign).sum();
            for (a, b) in ours.values.iter().zip(v.iter()) {
                assert!((a - b * sign / l1).abs() < 1e-9);
            }
        }
    }
}

/// Smallest modulus `r` with at least `max(1, floor(p n / 100))`
/// eigenvalues inside the disk of radius `r`.
fn lambda_c_oracle(eigs: &[c64], p: f64) -> f64 {
    let need = ((p * eigs.len() as f64 / 100.0 + 1e-9).floor() as usize).max(1);
    eigs.iter()
        .map(|z| z.norm())
        .filter(|&r| eigs.iter().filter(|w| w.norm() <= r).count() >= need)
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #[test]
    fn lambda_c_matches_counting_oracle(
        moduli in proptest::collection::vec(0.0f64..1.0, 1..60),
        p in 0.5f64..99.5,
    ) {
        let eigs: Vec<c64> = moduli.iter().enumerate()
            .map(|(i, &r)| c64::from_polar(r, i as f64))
            .collect();
        let ours = lambda_c(&eigs, &[p]).unwrap()[0].1;
        prop_assert_eq!(ours, lambda_c_oracle(&eigs, p));
    }

    #[test]
    fn kendall_tau_matches_pair_count(seed in any::<u64>(), n in 2usize..80) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a: Vec<u32> = (1..=n as u32).collect();
        let mut b = a.clone();
        use rand::seq::SliceRandom;
        a.shuffle(&mut rng);
        b.shuffle(&mut rng);
        let mut s = 0i64;
        for i in 0..n {
            for j in i + 1..n {
                let x = (a[i] as i64 - a[j] as i64).signum() * (b[i] as i64 - b[j] as i64).signum();
                s += x;
            }
        }
        let expected = s as f64 / (n * (n - 1) / 2) as f64;
        prop_assert!((kendall_tau(&a, &b) - expected).abs() < 1e-12);
    }
}
