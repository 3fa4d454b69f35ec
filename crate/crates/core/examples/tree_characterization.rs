//! Center, branches and the increase prediction for a few trees.

use iterline::treesym::{decompose, monochromatic_center_test, predict_increase};
use iterline::{distinguishing_number, line_graph, Graph, Limits};

fn main() -> iterline::Result<()> {
    let limits = Limits::default();
    for (name, t) in [
        ("P4", Graph::path(4)),
        ("double star, 2 leaves", Graph::double_star(2)),
        ("double star, 3 leaves", Graph::double_star(3)),
        ("K_{1,4}", Graph::star(4)),
    ] {
        let dec = decompose(&t)?;
        let p = predict_increase(&t, &limits)?;
        let (dt, _) = distinguishing_number(&t, &limits)?;
        let (dl, _) = distinguishing_number(line_graph(&t).child(), &limits)?;
        println!(
            "{name}: center {:?}, {} branches in {} classes",
            dec.center(),
            dec.branches().len(),
            dec.classes().len()
        );
        for d in &p.details {
            println!(
                "  class {}: m = {:?}, sides {:?}/{:?}",
                d.class, d.m, d.in_u, d.in_w
            );
        }
        println!(
            "  predicted increase {}, D(T) = {dt}, D(L(T)) = {dl}, monochromatic center {}",
            p.increases,
            monochromatic_center_test(&t, &limits)?
        );
    }
    Ok(())
}
