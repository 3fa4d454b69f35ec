//! Exact distinguishing numbers with witness colorings.

use iterline::{distinguishing_number, line_graph, Graph, Limits};

fn main() -> iterline::Result<()> {
    let limits = Limits::default();
    let graphs = [
        ("C4", Graph::cycle(4)),
        ("C6", Graph::cycle(6)),
        ("claw", Graph::claw()),
        ("K4", Graph::complete(4)),
        ("P5", Graph::path(5)),
        ("double star", Graph::double_star(2)),
    ];
    for (name, g) in graphs {
        let (d, witness) = distinguishing_number(&g, &limits)?;
        let (dl, _) = distinguishing_number(line_graph(&g).child(), &limits)?;
        println!(
            "D({name}) = {d} via {:?}; D(L({name})) = {dl}",
            witness.colors()
        );
    }
    Ok(())
}
