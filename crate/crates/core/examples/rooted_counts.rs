//! Rooted class counts of a small branch, the color bound for partitioned
//! colorings, and the bound from long degree-2 paths.

use iterline::distinguish::{partition_bound, remark_bound, rooted_sb_count};
use iterline::{Graph, Limits};

fn main() -> iterline::Result<()> {
    let limits = Limits::default();
    let cherry = Graph::star(2);
    for k in 1..=3 {
        println!(
            "cherry rooted at its middle, k = {k}: {}",
            rooted_sb_count(&cherry, 0, k, &limits)?
        );
    }
    for (r, k) in [(2, 3), (5, 6), (3, 1), (1, 4)] {
        println!("partition_bound({r}, {k}) = {}", partition_bound(r, k));
    }
    let b = remark_bound(&Graph::paw(), &limits)?;
    println!("paw: p = {}, bound {}", b.p, b.bound);
    Ok(())
}
