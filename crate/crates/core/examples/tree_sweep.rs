//! Compares D(T) with D(L(T)) over every tree up to a given order.
//!
//! `cargo run --release --example tree_sweep -- 10`

use iterline::treesym::sweep;
use iterline::Limits;

fn main() -> iterline::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(9);
    println!(
        "{:>3} {:>6} {:>9} {:>6} {:>9} {:>13}",
        "n", "trees", "increase", "equal", "decrease", "mispredicted"
    );
    for row in sweep(max_n, &Limits::default())? {
        println!(
            "{:>3} {:>6} {:>9} {:>6} {:>9} {:>13}",
            row.n, row.trees, row.increase, row.equal, row.decrease, row.mispredicted
        );
    }
    Ok(())
}
