//! Frequency and degree statistics of a move network.

use gonet::network::build_network_par;
use gonet::stats::{clustering_coefficient, degree_distributions, fit_curve, fit_slope, move_frequency};
use gonet::synthetic::random_corpus;
use gonet::{extract_events, ClassTable, NetworkConfig};

fn main() -> gonet::Result<()> {
    let table = ClassTable::global();
    let events = random_corpus(2, 200, 220)
        .iter()
        .map(|g| extract_events(g, table))
        .collect::<gonet::Result<Vec<_>>>()?;
    let net = build_network_par(&events, table.len(), NetworkConfig::default());

    let zipf = move_frequency(&net.vertex_counts)?;
    println!("{} classes used, {} moves", zipf.len(), zipf.total());
    for (rank, label, count, integrated) in zipf.rows().take(5) {
        println!("  rank {rank}: class {label}, {count} moves, tail {integrated:.4}");
    }
    let fit = fit_slope(&zipf.integrated, 1, 500)?;
    println!("integrated curve slope {:.3} over ranks {:?}", fit.slope, fit.fit_range);

    let deg = degree_distributions(&net);
    for (name, curve) in [("in", &deg.in_curve), ("out", &deg.out_curve)] {
        match fit_curve(curve) {
            Ok(f) => println!("{name}-degree curve slope {:.3}", f.slope),
            Err(e) => println!("{name}-degree curve: {e}"),
        }
    }
    println!("average clustering {:.3}", clustering_coefficient(&net)?.average);
    Ok(())
}
