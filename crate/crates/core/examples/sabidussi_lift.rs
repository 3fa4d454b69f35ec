//! Lifts automorphisms of a graph to its line graph and compares group orders.

use iterline::{automorphisms, lift, line_graph, verify_sabidussi, Graph, Limits};

fn main() -> iterline::Result<()> {
    let limits = Limits::default();
    let g = Graph::cycle(5);
    let prov = line_graph(&g);
    for phi in automorphisms(&g, &limits)?.elements() {
        let lifted = lift(&prov, phi)?;
        println!("{:?} -> {:?}", phi.images(), lifted.images());
    }
    for (name, g) in [
        ("C5", Graph::cycle(5)),
        ("paw", Graph::paw()),
        ("diamond", Graph::diamond()),
        ("K4", Graph::complete(4)),
        ("K5", Graph::complete(5)),
    ] {
        let r = verify_sabidussi(&g, &limits)?;
        println!(
            "{name}: |Aut G| = {}, |Aut L(G)| = {}, onto = {}",
            r.parent_order, r.child_order, r.surjective
        );
    }
    Ok(())
}
