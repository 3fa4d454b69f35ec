//! Two-color symmetry-breaking certificates for iterated line graphs.
//!
//! After `m` line-graph steps the graph `H = L^m(G)` has minimum degree at
//! least 3, so its clusters in `L^{2r}(H)` grow with `r`. Once every cluster
//! is large enough, cluster `v` receives a distinct number of color-2
//! vertices. Lifted automorphisms permute whole clusters, so a nonidentity
//! one moves some cluster onto a cluster with a different count and cannot
//! preserve the coloring. When `H` is `K_4`, `L(H)` has automorphisms that
//! are not lifts; the verifier then searches the whole group of `L^{2r}(H)`.

use serde::{Deserialize, Serialize};

use crate::autgroup::{automorphisms, has_nontrivial_automorphism, lift_chain};
use crate::distinguish::{breaks_all, distinguishing_number, min_degree_stabilization, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpecialClass};
use crate::linegraph::{iterate, line_graph, ClusterFamily, IterationChain};
use crate::Limits;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Paths, long cycles and trivial graphs: every iterate is again such a
    /// graph, and a two-coloring of the input itself is the witness.
    Direct,
    /// Cluster counts on `L^{2r}(H)`.
    Clusters,
}

/// How the per-cluster color-2 counts were chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountRule {
    /// Cluster `v` gets `v` ones; clusters need at least `n(H)` members.
    Ranked,
    /// Cluster `v` gets `f(v)` ones for an optimal distinguishing coloring `f`
    /// of `H`; clusters need at least `D(H)` members.
    Optimal,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BreakOptions {
    /// Use an optimal coloring of `H` to lower the cluster-size threshold.
    pub optimal_counts: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakCertificate {
    pub schema_version: u32,
    pub kind: CertificateKind,
    pub input: Graph,
    /// `H = L^m(input)`.
    pub base: Graph,
    pub m: usize,
    pub r: usize,
    /// Cluster depth used for the odd iterates `L^{(m+1)+2r'}`.
    pub r_prime: usize,
    pub rule: CountRule,
    /// Set when optimal counts were requested but `D` could not be computed.
    pub fallback: bool,
    pub ones_per_cluster: Vec<usize>,
    /// Color of every vertex of `L^{2r}(H)`: 0 for color 1, 1 for color 2.
    pub coloring: Vec<u8>,
    /// Every `k >= K` has `D(L^k(input)) <= 2`.
    #[serde(rename = "K")]
    pub k_index: usize,
}

impl BreakCertificate {
    pub fn coloring(&self) -> Coloring {
        Coloring::new(self.coloring.iter().map(|&b| b as usize + 1).collect(), 2)
            .expect("bits map into 1..=2")
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn break_symmetry(
    g: &Graph,
    options: BreakOptions,
    limits: &Limits,
) -> Result<BreakCertificate> {
    let class = g.classify_special();
    match class {
        SpecialClass::Cycle3 | SpecialClass::Cycle4 | SpecialClass::Cycle5 | SpecialClass::Claw => {
            Err(Error::IneligibleGraph(format!(
                "{class:?} has no iterate with distinguishing number 2"
            )))
        }
        SpecialClass::Empty
        | SpecialClass::SingleVertex
        | SpecialClass::P2
        | SpecialClass::Path
        | SpecialClass::CycleLong => direct_certificate(g, limits),
        _ if !g.is_connected() => Err(Error::Disconnected),
        _ => cluster_certificate(g, options, limits),
    }
}

fn direct_certificate(g: &Graph, limits: &Limits) -> Result<BreakCertificate> {
    let (d, witness) = distinguishing_number(g, limits)?;
    if d > 2 {
        return Err(Error::IneligibleGraph(format!("distinguishing number {d}")));
    }
    Ok(BreakCertificate {
        schema_version: SCHEMA_VERSION,
        kind: CertificateKind::Direct,
        input: g.clone(),
        base: g.clone(),
        m: 0,
        r: 0,
        r_prime: 0,
        rule: CountRule::Ranked,
        fallback: false,
        ones_per_cluster: Vec::new(),
        coloring: witness.colors().iter().map(|&c| (c - 1) as u8).collect(),
        k_index: 0,
    })
}

fn cluster_certificate(
    g: &Graph,
    options: BreakOptions,
    limits: &Limits,
) -> Result<BreakCertificate> {
    let mut m = min_degree_stabilization(g, limits)?;
    let mut pre = iterate(g, m, limits)?;
    // minimum degree 3 already excludes the small exceptions; kept as a guard
    while pre.top().classify_special().is_lift_exception() {
        pre.extend(limits)?;
        m += 1;
    }
    let base = pre.top().clone();

    let (rule, counts, fallback) = choose_counts(&base, options, limits)?;
    let needed = match rule {
        CountRule::Ranked => base.n(),
        CountRule::Optimal => counts.iter().copied().max().unwrap_or(0),
    };
    let r = cluster_depth(&base, needed, limits)?;

    let odd_base = line_graph(&base).child().clone();
    let odd_options = BreakOptions {
        optimal_counts: rule == CountRule::Optimal,
    };
    let (odd_rule, odd_counts, odd_fallback) = choose_counts(&odd_base, odd_options, limits)?;
    let odd_needed = match odd_rule {
        CountRule::Ranked => odd_base.n(),
        CountRule::Optimal => odd_counts.iter().copied().max().unwrap_or(0),
    };
    let r_prime = cluster_depth(&odd_base, odd_needed, limits)?;

    let chain = iterate(&base, 2 * r, limits)?;
    let family = ClusterFamily::from_chain(&chain, r)?;
    let coloring = color_clusters(&family, &counts);

    Ok(BreakCertificate {
        schema_version: SCHEMA_VERSION,
        kind: CertificateKind::Clusters,
        input: g.clone(),
        base,
        m,
        r,
        r_prime,
        rule,
        fallback: fallback || odd_fallback,
        ones_per_cluster: counts,
        coloring,
        k_index: (m + 2 * r).max(m + 1 + 2 * r_prime),
    })
}

/// Per-vertex counts: ranks, or an optimal distinguishing coloring when asked
/// for and computable.
fn choose_counts(
    h: &Graph,
    options: BreakOptions,
    limits: &Limits,
) -> Result<(CountRule, Vec<usize>, bool)> {
    let ranked = (CountRule::Ranked, (0..h.n()).collect(), false);
    if !options.optimal_counts {
        return Ok(ranked);
    }
    match distinguishing_number(h, limits) {
        Ok((_, f)) => Ok((CountRule::Optimal, f.colors().to_vec(), false)),
        Err(
            Error::WorkCapExceeded { .. }
            | Error::GroupTooLarge { .. }
            | Error::SearchCapExceeded(_)
            | Error::ColorCapExceeded { .. },
        ) => Ok((ranked.0, ranked.1, true)),
        Err(e) => Err(e),
    }
}

/// Least `r >= 1` whose clusters all have at least `needed` members. Sizes
/// one level down come from degrees, so `L^{2r}(h)` itself is never built.
pub fn cluster_depth(h: &Graph, needed: usize, limits: &Limits) -> Result<usize> {
    if h.min_degree()? < 3 {
        return Err(Error::IneligibleGraph(
            "clusters only grow when the minimum degree is at least 3".into(),
        ));
    }
    let mut sizes: Vec<u128> = (0..h.n())
        .map(|v| crate::util::binomial(h.degree(v) as u64, 2))
        .collect();
    let mut r = 1;
    let mut chain = IterationChain::new(h);
    while sizes.iter().copied().min().unwrap_or(0) < needed as u128 {
        chain.extend_to(2 * r, limits)?;
        sizes = ClusterFamily::from_chain(&chain, r)?.next_sizes();
        r += 1;
    }
    Ok(r)
}

/// Color 2 goes to the `counts[v]` lowest-index members of each cluster.
fn color_clusters(family: &ClusterFamily, counts: &[usize]) -> Vec<u8> {
    let mut bits = vec![0u8; family.host().n()];
    for (v, cluster) in family.clusters().iter().enumerate() {
        for &z in &cluster[..counts[v]] {
            bits[z] = 1;
        }
    }
    bits
}

/// Summary of a successful verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub host_vertices: usize,
    /// Nonidentity automorphisms of the base whose lifts were checked.
    pub automorphisms_checked: usize,
    /// Whether the whole automorphism group of `L^{2r}(H)` was also searched.
    pub full_group_checked: bool,
    pub k_index: usize,
}

/// Rechecks every claim in `cert` from its input graph. Any discrepancy is an
/// [`Error::Verification`].
pub fn verify_certificate(cert: &BreakCertificate, limits: &Limits) -> Result<VerifyReport> {
    let fail = |msg: String| Err(Error::Verification(msg));
    if cert.schema_version != SCHEMA_VERSION {
        return fail(format!(
            "unsupported schema version {}",
            cert.schema_version
        ));
    }
    if cert.coloring.iter().any(|&b| b > 1) {
        return fail("coloring entries must be 0 or 1".into());
    }
    match cert.kind {
        CertificateKind::Direct => verify_direct(cert, limits),
        CertificateKind::Clusters => verify_clusters(cert, limits),
    }
}

fn verify_direct(cert: &BreakCertificate, limits: &Limits) -> Result<VerifyReport> {
    let fail = |msg: &str| Err(Error::Verification(msg.to_string()));
    let class = cert.input.classify_special();
    if !matches!(
        class,
        SpecialClass::Empty
            | SpecialClass::SingleVertex
            | SpecialClass::P2
            | SpecialClass::Path
            | SpecialClass::CycleLong
    ) {
        return fail("direct certificates cover only paths and cycles of length at least 6");
    }
    if cert.base != cert.input
        || cert.m != 0
        || cert.r != 0
        || cert.r_prime != 0
        || cert.k_index != 0
    {
        return fail("direct certificate must have base = input and m = r = r' = K = 0");
    }
    if cert.coloring.len() != cert.input.n() {
        return fail("coloring length differs from the vertex count");
    }
    let group = automorphisms(&cert.input, limits)?;
    let colors: Vec<usize> = cert.coloring.iter().map(|&b| b as usize).collect();
    if !breaks_all(&colors, &group) {
        return fail("a nonidentity automorphism preserves the coloring");
    }
    Ok(VerifyReport {
        ok: true,
        host_vertices: cert.input.n(),
        automorphisms_checked: group.order().saturating_sub(1),
        full_group_checked: true,
        k_index: 0,
    })
}

fn verify_clusters(cert: &BreakCertificate, limits: &Limits) -> Result<VerifyReport> {
    let fail = |msg: String| Err(Error::Verification(msg));
    let pre = iterate(&cert.input, cert.m, limits)?;
    if pre.top() != &cert.base {
        return fail(format!("base is not L^{}(input)", cert.m));
    }
    let base = &cert.base;
    if !base.is_connected() || base.min_degree()? < 3 {
        return fail("base must be connected with minimum degree at least 3".into());
    }
    if cert.r == 0 {
        return fail("cluster depth r must be positive".into());
    }
    if cert.ones_per_cluster.len() != base.n() {
        return fail("one count per base vertex expected".into());
    }
    let chain = iterate(base, 2 * cert.r, limits)?;
    let family = ClusterFamily::from_chain(&chain, cert.r)?;
    if cert.coloring.len() != family.host().n() {
        return fail(format!(
            "coloring has {} entries but L^{}(base) has {} vertices",
            cert.coloring.len(),
            2 * cert.r,
            family.host().n()
        ));
    }
    let sums: Vec<usize> = family
        .clusters()
        .iter()
        .map(|c| c.iter().map(|&z| cert.coloring[z] as usize).sum())
        .collect();
    if sums != cert.ones_per_cluster {
        return fail("recorded per-cluster counts do not match the coloring".into());
    }
    let group = automorphisms(base, limits)?;
    match cert.rule {
        CountRule::Ranked => {
            let mut sorted = sums.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return fail("two clusters carry the same count".into());
            }
        }
        CountRule::Optimal => {
            if !breaks_all(&sums, &group) {
                return fail("per-cluster counts do not distinguish the base graph".into());
            }
        }
    }
    for phi in group.nontrivial() {
        let lifted = lift_chain(&chain, phi)?;
        if (0..lifted.len()).all(|z| cert.coloring[z] == cert.coloring[lifted.apply(z)]) {
            return fail(format!(
                "lifted automorphism {:?} preserves the coloring",
                phi.images()
            ));
        }
    }
    let odd_base = line_graph(base).child().clone();
    // K4 has minimum degree 3 but its line graph, the octahedron, has twice
    // as many automorphisms; then the lifted ones are not all of them.
    let lift_covers = automorphisms(&odd_base, limits)?.order() == group.order();
    if !lift_covers {
        let bits: Vec<usize> = cert.coloring.iter().map(|&b| b as usize).collect();
        if has_nontrivial_automorphism(family.host(), &bits, limits)? {
            return fail("an automorphism not lifted from the base preserves the coloring".into());
        }
    }
    let odd_needed = match (cert.rule, cert.fallback) {
        (CountRule::Optimal, false) => distinguishing_number(&odd_base, limits)?.0,
        _ => odd_base.n(),
    };
    if cert.r_prime == 0 || cert.r_prime < cluster_depth(&odd_base, odd_needed, limits)? {
        return fail("r' is too small for the odd iterates".into());
    }
    let k_index = (cert.m + 2 * cert.r).max(cert.m + 1 + 2 * cert.r_prime);
    if cert.k_index != k_index {
        return fail(format!("K should be {k_index}, found {}", cert.k_index));
    }
    Ok(VerifyReport {
        ok: true,
        host_vertices: family.host().n(),
        automorphisms_checked: group.order() - 1,
        full_group_checked: !lift_covers,
        k_index,
    })
}
