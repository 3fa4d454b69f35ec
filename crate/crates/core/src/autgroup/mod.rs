//! Automorphism groups as explicit element lists, and the map that lifts an
//! automorphism of `G` to one of `L(G)` by acting on edge endpoints.

mod search;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linegraph::{ClusterFamily, IterationChain, Provenance};
use crate::Limits;

/// A bijection of `0..n` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, len: n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::IneligibleGraph(format!(
                    "image {x} repeated; not a bijection"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// Edge-preserving; with equal vertex counts this also preserves non-edges.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && g.edges().all(|e| g.has_edge(self.0[e.u()], self.0[e.v()]))
    }
}

/// The automorphism group of `host`, elements sorted by image array.
#[derive(Clone, Debug)]
pub struct AutGroup {
    host: Graph,
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    /// Elements fixing `v`.
    pub fn stabilizer(&self, v: usize) -> AutGroup {
        AutGroup {
            host: self.host.clone(),
            elements: self
                .elements
                .iter()
                .filter(|p| p.apply(v) == v)
                .cloned()
                .collect(),
        }
    }

    /// Orbits of the action on vertices, each sorted, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.host.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let mut orbit: Vec<usize> = self.elements.iter().map(|p| p.apply(v)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &w in &orbit {
                seen[w] = true;
            }
            out.push(orbit);
        }
        out
    }
}

impl Serialize for AutGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AutGroup", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("elements", &self.elements)?;
        st.end()
    }
}

pub fn automorphisms(g: &Graph, limits: &Limits) -> Result<AutGroup> {
    automorphisms_preserving(g, &vec![0; g.n()], limits)
}

/// Automorphisms that map every vertex to one with the same label.
pub fn automorphisms_preserving(g: &Graph, labels: &[usize], limits: &Limits) -> Result<AutGroup> {
    if labels.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: labels.len(),
        });
    }
    let mut elements: Vec<Permutation> = search::enumerate(g, labels, limits)?
        .into_iter()
        .map(Permutation)
        .collect();
    elements.sort_unstable();
    Ok(AutGroup {
        host: g.clone(),
        elements,
    })
}

/// Whether a nonidentity automorphism preserves `labels`, stopping at the first.
pub fn has_nontrivial_automorphism(g: &Graph, labels: &[usize], limits: &Limits) -> Result<bool> {
    if labels.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            actual: labels.len(),
        });
    }
    search::has_nontrivial(g, labels, limits)
}

/// Acts on the line graph by `{u, v} -> {φ(u), φ(v)}`.
pub fn lift(prov: &Provenance, phi: &Permutation) -> Result<Permutation> {
    if !phi.is_automorphism_of(prov.parent()) {
        return Err(Error::NotAutomorphism);
    }
    Ok(lift_unchecked(prov, phi))
}

fn lift_unchecked(prov: &Provenance, phi: &Permutation) -> Permutation {
    let parent = prov.parent();
    Permutation(
        prov.origin()
            .iter()
            .map(|e| {
                parent
                    .edge_index(phi.apply(e.u()), phi.apply(e.v()))
                    .expect("automorphisms map edges to edges")
            })
            .collect(),
    )
}

/// Lifts an automorphism of the chain's base through every link.
pub fn lift_chain(chain: &IterationChain, phi: &Permutation) -> Result<Permutation> {
    lift_to_level(chain, phi, chain.len())
}

/// Lifts an automorphism of the chain's base to `L^level`.
pub fn lift_to_level(
    chain: &IterationChain,
    phi: &Permutation,
    level: usize,
) -> Result<Permutation> {
    if !phi.is_automorphism_of(chain.base()) {
        return Err(Error::NotAutomorphism);
    }
    if level > chain.len() {
        return Err(Error::IndexOutOfRange {
            index: level,
            len: chain.len(),
        });
    }
    Ok(chain.links()[..level]
        .iter()
        .fold(phi.clone(), |p, link| lift_unchecked(link, &p)))
}

/// Outcome of lifting every automorphism of `G` to `L(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SabidussiReport {
    pub injective: bool,
    pub surjective: bool,
    pub parent_order: usize,
    pub child_order: usize,
}

impl SabidussiReport {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }
}

pub fn verify_sabidussi(g: &Graph, limits: &Limits) -> Result<SabidussiReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let prov = crate::linegraph::line_graph(g);
    let parent = automorphisms(g, limits)?;
    let child = automorphisms(prov.child(), limits)?;
    let images: HashSet<Permutation> = parent
        .elements()
        .iter()
        .map(|p| lift_unchecked(&prov, p))
        .collect();
    Ok(SabidussiReport {
        injective: images.len() == parent.order(),
        surjective: child.elements().iter().all(|p| images.contains(p)),
        parent_order: parent.order(),
        child_order: child.order(),
    })
}

/// Whether the lift of `phi` to `L^{2m}(G)` carries each cluster of `v` onto
/// the cluster of `phi(v)`.
pub fn cluster_equivariance(
    g: &Graph,
    m: usize,
    phi: &Permutation,
    limits: &Limits,
) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let chain = crate::linegraph::iterate(g, 2 * m, limits)?;
    for level in 0..2 * m {
        let class = chain.graph_at(level).classify_special();
        if class.is_lift_exception() {
            return Err(Error::IneligibleGraph(format!(
                "L^{level}(G) is {class:?}, where lifting is not onto"
            )));
        }
    }
    let family = ClusterFamily::from_chain(&chain, m)?;
    let lifted = lift_chain(&chain, phi)?;
    Ok(clusters_equivariant(&family, phi, &lifted))
}

/// `lifted(cluster(v)) == cluster(phi(v))` for every base vertex `v`.
pub fn clusters_equivariant(
    family: &ClusterFamily,
    phi: &Permutation,
    lifted: &Permutation,
) -> bool {
    family.clusters().iter().enumerate().all(|(v, c)| {
        let mut image: Vec<usize> = c.iter().map(|&z| lifted.apply(z)).collect();
        image.sort_unstable();
        image == family.cluster(phi.apply(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic_small;
    use crate::linegraph::{iterate, line_graph};

    fn limits() -> Limits {
        Limits::default()
    }

    /// Every bijection checked directly; oracle for small graphs.
    fn brute_force_order(g: &Graph) -> usize {
        let mut count = 0;
        crate::util::for_each_permutation(g.n(), |p| {
            if g.edges().all(|e| g.has_edge(p[e.u()], p[e.v()])) {
                count += 1;
            }
        });
        count
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(
            automorphisms(&Graph::complete(4), &limits())
                .unwrap()
                .order(),
            24
        );
        assert_eq!(automorphisms(&Graph::paw(), &limits()).unwrap().order(), 2);
        assert_eq!(
            automorphisms(&Graph::diamond(), &limits()).unwrap().order(),
            4
        );
        assert_eq!(
            automorphisms(&Graph::cycle(5), &limits()).unwrap().order(),
            10
        );
        assert_eq!(
            automorphisms(&Graph::empty(0), &limits()).unwrap().order(),
            1
        );
        assert_eq!(
            automorphisms(&Graph::empty(3), &limits()).unwrap().order(),
            6
        );
    }

    #[test]
    fn orders_agree_with_brute_force() {
        let graphs = [
            Graph::paw(),
            Graph::diamond(),
            Graph::cycle(6),
            Graph::double_star(2),
            Graph::path(6),
            Graph::star(5),
            Graph::build(7, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6)]).unwrap(),
            Graph::build(6, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap(),
        ];
        for g in &graphs {
            let group = automorphisms(g, &limits()).unwrap();
            assert_eq!(group.order(), brute_force_order(g), "{g:?}");
            assert!(group.elements().iter().all(|p| p.is_automorphism_of(g)));
        }
    }

    #[test]
    fn elements_sorted_and_closed() {
        let group = automorphisms(&Graph::cycle(6), &limits()).unwrap();
        assert!(group.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(group.elements()[0].is_identity());
        for a in group.elements() {
            assert!(group.contains(&a.inverse()));
            for b in group.elements() {
                assert!(group.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn group_cap() {
        let tight = Limits {
            group_cap: 100,
            ..Limits::default()
        };
        assert!(matches!(
            automorphisms(&Graph::complete(6), &tight),
            Err(Error::GroupTooLarge { cap: 100 })
        ));
    }

    #[test]
    fn lift_identity_is_identity() {
        let prov = line_graph(&Graph::complete(4));
        let l = lift(&prov, &Permutation::identity(4)).unwrap();
        assert!(l.is_identity());
        assert_eq!(l.len(), 6);
    }

    #[test]
    fn lift_transposition_on_k4() {
        let prov = line_graph(&Graph::complete(4));
        let swap = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let l = lift(&prov, &swap).unwrap();
        let idx = |a, b| prov.vertex_for(a, b).unwrap();
        assert_eq!(l.apply(idx(0, 2)), idx(1, 2));
        assert_eq!(l.apply(idx(1, 2)), idx(0, 2));
        assert_eq!(l.apply(idx(0, 3)), idx(1, 3));
        assert_eq!(l.apply(idx(1, 3)), idx(0, 3));
        assert_eq!(l.apply(idx(0, 1)), idx(0, 1));
        assert_eq!(l.apply(idx(2, 3)), idx(2, 3));
    }

    #[test]
    fn lift_of_paw_symmetry_is_diamond_automorphism() {
        let prov = line_graph(&Graph::paw());
        let group = automorphisms(&Graph::paw(), &limits()).unwrap();
        let phi = group.nontrivial().next().unwrap();
        let l = lift(&prov, phi).unwrap();
        assert!(!l.is_identity());
        assert!(is_isomorphic_small(prov.child(), &Graph::diamond()));
        let diamond_group = automorphisms(prov.child(), &limits()).unwrap();
        assert!(diamond_group.contains(&l));
    }

    #[test]
    fn lift_rejects_non_automorphism() {
        let prov = line_graph(&Graph::paw());
        let bad = Permutation::from_images(vec![3, 1, 2, 0]).unwrap();
        assert!(matches!(lift(&prov, &bad), Err(Error::NotAutomorphism)));
    }

    #[test]
    fn lift_chain_on_k4() {
        let chain = iterate(&Graph::complete(4), 2, &limits()).unwrap();
        let group = automorphisms(&Graph::complete(4), &limits()).unwrap();
        for phi in group.elements() {
            let l = lift_chain(&chain, phi).unwrap();
            assert_eq!(l.len(), 12);
            assert!(l.is_automorphism_of(chain.top()));
            assert_eq!(l.is_identity(), phi.is_identity());
        }
        let a = &group.elements()[5];
        let b = &group.elements()[17];
        assert_eq!(
            lift_chain(&chain, &a.compose(b)).unwrap(),
            lift_chain(&chain, a)
                .unwrap()
                .compose(&lift_chain(&chain, b).unwrap())
        );
    }

    #[test]
    fn sabidussi_reports() {
        let c6 = verify_sabidussi(&Graph::cycle(6), &limits()).unwrap();
        assert!(c6.is_isomorphism());
        assert_eq!((c6.parent_order, c6.child_order), (12, 12));

        let q = verify_sabidussi(&Graph::paw(), &limits()).unwrap();
        assert_eq!((q.parent_order, q.child_order), (2, 4));
        assert!(q.injective);
        assert!(!q.surjective);

        let p2 = verify_sabidussi(&Graph::path(2), &limits()).unwrap();
        assert_eq!((p2.parent_order, p2.child_order), (2, 1));
        assert!(!p2.injective);

        assert!(matches!(
            verify_sabidussi(&Graph::empty(2), &limits()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn k4_is_not_covered_by_the_lift() {
        // L(K4) is the octahedron, with twice as many automorphisms.
        let r = verify_sabidussi(&Graph::complete(4), &limits()).unwrap();
        assert_eq!((r.parent_order, r.child_order), (24, 48));
        assert!(r.injective);
        assert!(!r.surjective);
    }

    #[test]
    fn equivariance_examples() {
        let k4 = Graph::complete(4);
        for phi in automorphisms(&k4, &limits()).unwrap().elements() {
            assert!(cluster_equivariance(&k4, 1, phi, &limits()).unwrap());
        }
        let rot = Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap();
        assert!(cluster_equivariance(&Graph::cycle(6), 2, &rot, &limits()).unwrap());
        assert!(matches!(
            cluster_equivariance(&Graph::paw(), 1, &Permutation::identity(4), &limits()),
            Err(Error::IneligibleGraph(_))
        ));
    }

    #[test]
    fn stabilizer_and_orbits() {
        let g = automorphisms(&Graph::star(3), &limits()).unwrap();
        assert_eq!(g.stabilizer(1).order(), 2);
        assert_eq!(g.orbits(), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn preserving_labels() {
        let g = automorphisms_preserving(&Graph::cycle(4), &[1, 0, 0, 0], &limits()).unwrap();
        assert_eq!(g.order(), 2);
        assert!(has_nontrivial_automorphism(&Graph::cycle(4), &[1, 0, 0, 0], &limits()).unwrap());
        assert!(has_nontrivial_automorphism(&Graph::cycle(4), &[1, 1, 0, 0], &limits()).unwrap());
        assert!(!has_nontrivial_automorphism(&Graph::cycle(4), &[1, 1, 2, 0], &limits()).unwrap());
    }
}
