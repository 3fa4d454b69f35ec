//! Cluster sizes over the vertices of K4 and the Petersen graph.

use iterline::{clusters, Graph, Limits};

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::build(10, edges).expect("valid edges")
}

fn main() -> iterline::Result<()> {
    let limits = Limits::default();
    for (name, g) in [("K4", Graph::complete(4)), ("Petersen", petersen())] {
        for m in 1..=2 {
            let family = clusters(&g, m, &limits)?;
            println!(
                "{name}, m = {m}: host has {} vertices, cluster sizes {:?}, next {:?}",
                family.host().n(),
                family.sizes(),
                family.next_sizes()
            );
        }
    }
    Ok(())
}
