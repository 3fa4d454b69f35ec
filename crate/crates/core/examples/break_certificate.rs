//! Builds a two-color certificate for K4, checks it, then corrupts it.

use iterline::certificate::BreakOptions;
use iterline::{break_symmetry, verify_certificate, Graph, Limits};

fn main() -> iterline::Result<()> {
    let limits = Limits::default();
    let cert = break_symmetry(&Graph::complete(4), BreakOptions::default(), &limits)?;
    println!(
        "m = {}, r = {}, r' = {}, K = {}, ones per cluster {:?}",
        cert.m, cert.r, cert.r_prime, cert.k_index, cert.ones_per_cluster
    );
    let report = verify_certificate(&cert, &limits)?;
    println!("verified on {} vertices", report.host_vertices);

    let mut bad = cert.clone();
    let flip = bad
        .coloring
        .iter()
        .position(|&b| b == 1)
        .expect("some vertex has color 2");
    bad.coloring[flip] = 0;
    match verify_certificate(&bad, &limits) {
        Ok(_) => println!("tampered certificate accepted"),
        Err(e) => println!("tampered certificate rejected: {e}"),
    }

    let paw = break_symmetry(
        &Graph::paw(),
        BreakOptions {
            optimal_counts: true,
        },
        &limits,
    )?;
    println!("paw: m = {}, r = {}, K = {}", paw.m, paw.r, paw.k_index);
    Ok(())
}
