//! PageRank, CheiRank and HITS on a move network.

use gonet::network::build_network_par;
use gonet::spectral::{cheirank, hits, pagerank, rank_correlation, GoogleMatrix};
use gonet::synthetic::random_corpus;
use gonet::{extract_events, ClassTable, NetworkConfig};

fn main() -> gonet::Result<()> {
    let table = ClassTable::global();
    let events = random_corpus(3, 100, 200)
        .iter()
        .map(|g| extract_events(g, table))
        .collect::<gonet::Result<Vec<_>>>()?;
    let net = build_network_par(&events, table.len(), NetworkConfig::default());

    let alpha = 0.85;
    let pr = pagerank(&GoogleMatrix::build(&net, alpha)?, 1e-12, 100_000)?;
    let cr = cheirank(&net, alpha, 1e-12, 100_000)?;
    let (hubs, authorities) = hits(&net, true, 1e-12, 100_000)?;
    println!("PageRank converged in {} iterations", pr.iterations);
    for (name, v) in [("PageRank", &pr), ("CheiRank", &cr), ("hubs", &hubs), ("authorities", &authorities)] {
        let top: Vec<String> = v.order[..5].iter().map(|c| c.to_string()).collect();
        println!("{name:>12} top 5: {}", top.join(" "));
    }
    println!("Kendall tau(PageRank, CheiRank) = {:.3}", rank_correlation(&pr, &cr)?.kendall_tau);
    Ok(())
}
