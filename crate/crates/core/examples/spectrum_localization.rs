//! Full Google matrix spectrum and where its leading eigenvectors live.

use gonet::network::build_network_par;
use gonet::spectral::{full_spectrum, lambda_c, localization_profile, top_entries, GoogleMatrix};
use gonet::synthetic::random_corpus;
use gonet::{extract_events, ClassTable, NetworkConfig};

fn main() -> gonet::Result<()> {
    let table = ClassTable::global();
    let events = random_corpus(4, 100, 200)
        .iter()
        .map(|g| extract_events(g, table))
        .collect::<gonet::Result<Vec<_>>>()?;
    let net = build_network_par(&events, table.len(), NetworkConfig::default());

    let g = GoogleMatrix::build(&net, 1.0)?;
    let report = full_spectrum(&g, 3)?;
    for (p, r) in lambda_c(&report.eigenvalues, &[80.0, 90.0, 95.0, 99.0])? {
        println!("{p:>4}% of eigenvalues within |lambda| <= {r:.4}");
    }

    let order = net.frequency_order();
    for (i, pair) in report.eigenvectors.iter().enumerate() {
        let profile = localization_profile(&pair.vector, &order, 50);
        let head: f64 = profile[..10].iter().sum();
        println!(
            "eigenvector {i}: lambda = {:.4}{:+.4}i, {:.1}% weight on the 10 most frequent classes",
            pair.value.re,
            pair.value.im,
            100.0 * head
        );
        for e in top_entries(&pair.vector, 2, table) {
            println!("  class {} ({:.3}):\n{}", e.class_id, e.weight, e.diagram);
        }
    }
    Ok(())
}
