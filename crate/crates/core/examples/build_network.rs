//! Replay a few games into events and link nearby consecutive moves.

use gonet::synthetic::random_corpus;
use gonet::{build_network, extract_events, ClassTable, NetworkConfig};

fn main() -> gonet::Result<()> {
    let table = ClassTable::global();
    let games = random_corpus(1, 50, 200);
    let events = games
        .iter()
        .map(|g| extract_events(g, table))
        .collect::<gonet::Result<Vec<_>>>()?;

    for d in [1, 2, 4, 8] {
        let net = build_network(&events, table.len(), NetworkConfig::new(d)?);
        println!(
            "d = {d}: {} distinct links, total weight {}",
            net.edges.len(),
            net.total_weight()
        );
    }

    let net = build_network(&events, table.len(), NetworkConfig::default());
    let (&(a, b), &w) = net.edges.iter().max_by_key(|(_, w)| **w).unwrap();
    println!("heaviest link {a} -> {b} (weight {w}):");
    println!("{}\n  ->\n{}", table.get(a).unwrap().render_ascii(), table.get(b).unwrap().render_ascii());
    Ok(())
}
