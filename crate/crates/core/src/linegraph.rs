//! Line graphs with provenance, iterated line graphs, the shared-endpoint
//! origin map on the second iterate, and the vertex clusters it induces.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::Limits;

/// One application of the line-graph operator.
///
/// Child vertex `i` is the parent edge of lexicographic rank `i`.
#[derive(Clone, Debug)]
pub struct Provenance {
    parent: Arc<Graph>,
    child: Arc<Graph>,
    origin: Vec<Edge>,
}

impl Provenance {
    pub fn parent(&self) -> &Graph {
        &self.parent
    }

    pub fn child(&self) -> &Graph {
        &self.child
    }

    pub fn origin(&self) -> &[Edge] {
        &self.origin
    }

    /// The child vertex standing for parent edge `{a, b}`.
    pub fn vertex_for(&self, a: usize, b: usize) -> Option<usize> {
        self.parent.edge_index(a, b)
    }
}

impl Serialize for Provenance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            vertex: usize,
            edge: Edge,
        }
        let vertices: Vec<Entry> = self
            .origin
            .iter()
            .enumerate()
            .map(|(vertex, &edge)| Entry { vertex, edge })
            .collect();
        let mut st = s.serialize_struct("Provenance", 4)?;
        st.serialize_field("parent_vertices", &self.parent.n())?;
        st.serialize_field("child_vertices", &self.child.n())?;
        st.serialize_field("child_edges", &self.child.edge_count())?;
        st.serialize_field("vertices", &vertices)?;
        st.end()
    }
}

pub fn line_graph(g: &Graph) -> Provenance {
    line_graph_shared(Arc::new(g.clone()))
}

fn line_graph_shared(parent: Arc<Graph>) -> Provenance {
    let origin = parent.edge_list();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); parent.n()];
    for (i, e) in origin.iter().enumerate() {
        incident[e.u()].push(i);
        incident[e.v()].push(i);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); origin.len()];
    for inc in &incident {
        for (a, &i) in inc.iter().enumerate() {
            for &j in &inc[a + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Provenance {
        parent,
        child: Arc::new(Graph::from_sorted_adjacency(adj)),
        origin,
    }
}

/// Number of edges of `L(g)`: one per pair of edges meeting at a vertex.
pub fn line_graph_edge_count(g: &Graph) -> u128 {
    (0..g.n())
        .map(|v| crate::util::binomial(g.degree(v) as u64, 2))
        .sum()
}

/// `L^0(G), L^1(G), ..., L^k(G)` linked by provenance tables.
#[derive(Clone, Debug)]
pub struct IterationChain {
    base: Arc<Graph>,
    links: Vec<Provenance>,
}

impl IterationChain {
    pub fn new(base: &Graph) -> Self {
        IterationChain {
            base: Arc::new(base.clone()),
            links: Vec::new(),
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn links(&self) -> &[Provenance] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// `L^level(base)`; panics when `level > len()`.
    pub fn graph_at(&self, level: usize) -> &Graph {
        match level {
            0 => &self.base,
            l => self.links[l - 1].child(),
        }
    }

    pub fn top(&self) -> &Graph {
        self.graph_at(self.len())
    }

    fn top_shared(&self) -> Arc<Graph> {
        match self.links.last() {
            Some(p) => Arc::clone(&p.child),
            None => Arc::clone(&self.base),
        }
    }

    /// Appends one more line-graph step, respecting the vertex cap.
    pub fn extend(&mut self, limits: &Limits) -> Result<()> {
        let next_vertices = self.top().edge_count();
        if next_vertices > limits.vertex_cap {
            return Err(Error::SizeCapExceeded {
                iteration: self.len() + 1,
                vertices: next_vertices,
                cap: limits.vertex_cap,
            });
        }
        let link = line_graph_shared(self.top_shared());
        self.links.push(link);
        Ok(())
    }

    pub fn extend_to(&mut self, k: usize, limits: &Limits) -> Result<()> {
        while self.len() < k {
            self.extend(limits)?;
        }
        Ok(())
    }

    /// The shared-endpoint map `V(L^{level+2}) -> V(L^level)`.
    pub fn origin_map(&self, level: usize) -> Result<Vec<usize>> {
        if level + 2 > self.len() {
            return Err(Error::IndexOutOfRange {
                index: level + 2,
                len: self.len(),
            });
        }
        Ok(origin_map(&self.links[level], &self.links[level + 1]))
    }
}

pub fn iterate(g: &Graph, k: usize, limits: &Limits) -> Result<IterationChain> {
    let mut chain = IterationChain::new(g);
    chain.extend_to(k, limits)?;
    Ok(chain)
}

/// Sends each vertex of `L^2(G)` (a pair of adjacent edges of `G`) to the
/// vertex the two edges share. `upper.parent()` must be `lower.child()`.
pub fn origin_map(lower: &Provenance, upper: &Provenance) -> Vec<usize> {
    debug_assert_eq!(lower.child(), upper.parent());
    upper
        .origin
        .iter()
        .map(|pair| {
            let a = lower.origin[pair.u()];
            let b = lower.origin[pair.v()];
            a.shared_endpoint(&b)
                .expect("adjacent line-graph vertices share exactly one endpoint")
        })
        .collect()
}

/// The clusters of every base vertex inside `L^{2m}(G)`.
#[derive(Clone, Debug)]
pub struct ClusterFamily {
    depth: usize,
    host: Arc<Graph>,
    owner: Vec<usize>,
    clusters: Vec<Vec<usize>>,
}

impl ClusterFamily {
    /// Uses the first `2 * depth` links of `chain`.
    pub fn from_chain(chain: &IterationChain, depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::IndexOutOfRange { index: 0, len: 0 });
        }
        if chain.len() < 2 * depth {
            return Err(Error::IndexOutOfRange {
                index: 2 * depth,
                len: chain.len(),
            });
        }
        // owner[z] for z in L^{2j}: the base vertex whose cluster contains z
        let mut owner: Vec<usize> = (0..chain.base().n()).collect();
        for j in 0..depth {
            let f = chain.origin_map(2 * j)?;
            owner = f.iter().map(|&u| owner[u]).collect();
        }
        let mut clusters = vec![Vec::new(); chain.base().n()];
        for (z, &v) in owner.iter().enumerate() {
            clusters[v].push(z);
        }
        let host = match 2 * depth {
            0 => Arc::clone(&chain.base),
            l => Arc::clone(&chain.links[l - 1].child),
        };
        Ok(ClusterFamily {
            depth,
            host,
            owner,
            clusters,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Sorted member list of the cluster of base vertex `v`.
    pub fn cluster(&self, v: usize) -> &[usize] {
        &self.clusters[v]
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    /// Base vertex owning host vertex `z`.
    pub fn owner(&self, z: usize) -> usize {
        self.owner[z]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.clusters.iter().map(Vec::len).collect()
    }

    pub fn min_size(&self) -> usize {
        self.clusters.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Cluster sizes one level deeper, without building `L^{2m+2}`: every
    /// host vertex `u` has `C(deg(u), 2)` preimages under the origin map.
    pub fn next_sizes(&self) -> Vec<u128> {
        self.clusters
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&u| crate::util::binomial(self.host.degree(u) as u64, 2))
                    .sum()
            })
            .collect()
    }

    /// Disjoint and exhaustive over the host vertices.
    pub fn is_partition(&self) -> bool {
        let mut seen = vec![false; self.host.n()];
        for c in &self.clusters {
            for &z in c {
                if z >= seen.len() || seen[z] {
                    return false;
                }
                seen[z] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl Serialize for ClusterFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<usize, &Vec<usize>> = self.clusters.iter().enumerate().collect();
        let mut st = s.serialize_struct("ClusterFamily", 3)?;
        st.serialize_field("depth", &self.depth)?;
        st.serialize_field("host_vertices", &self.host.n())?;
        st.serialize_field("clusters", &map)?;
        st.end()
    }
}

/// Clusters of depth `m` for a connected graph.
pub fn clusters(g: &Graph, m: usize, limits: &Limits) -> Result<ClusterFamily> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let chain = iterate(g, 2 * m, limits)?;
    ClusterFamily::from_chain(&chain, m)
}
