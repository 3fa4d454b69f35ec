//! Iterates the line graph of the paw and traces vertices of `L^2` back to
//! the vertices they came from.

use iterline::{iterate, Graph, Limits};

fn main() -> iterline::Result<()> {
    let chain = iterate(&Graph::paw(), 3, &Limits::default())?;
    for level in 0..=chain.len() {
        let g = chain.graph_at(level);
        println!(
            "L^{level}: {} vertices, {} edges, degrees {:?}",
            g.n(),
            g.edge_count(),
            g.degrees()
        );
    }
    let link = &chain.links()[0];
    for (v, e) in link.origin().iter().enumerate() {
        println!("L(G) vertex {v} is the edge {{{}, {}}}", e.u(), e.v());
    }
    let f = chain.origin_map(0)?;
    println!("origin of each L^2 vertex: {f:?}");
    Ok(())
}
