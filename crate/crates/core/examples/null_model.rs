//! Compare a network with its move-order-shuffled counterpart.

use gonet::stats::clustering_coefficient;
use gonet::synthetic::random_corpus;
use gonet::{build_network, extract_events, shuffle_baseline, ClassTable, NetworkConfig};

fn main() -> gonet::Result<()> {
    let table = ClassTable::global();
    let events = random_corpus(5, 100, 200)
        .iter()
        .map(|g| extract_events(g, table))
        .collect::<gonet::Result<Vec<_>>>()?;
    let config = NetworkConfig::default();
    let original = build_network(&events, table.len(), config);
    let shuffled = build_network(&shuffle_baseline(&events, 42), table.len(), config);

    println!("same class frequencies: {}", original.vertex_counts == shuffled.vertex_counts);
    for (name, net) in [("original", &original), ("shuffled", &shuffled)] {
        println!(
            "{name:>9}: {} links, weight {}, clustering {:.3}",
            net.edges.len(),
            net.total_weight(),
            clustering_coefficient(net)?.average
        );
    }
    Ok(())
}
