//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge `{u, v}` stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Fails on a loop.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::LoopEdge(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint shared with `other`, if exactly one is shared.
    pub fn shared_endpoint(&self, other: &Edge) -> Option<usize> {
        if self == other {
            return None;
        }
        if other.contains(self.u) {
            Some(self.u)
        } else if other.contains(self.v) {
            Some(self.v)
        } else {
            None
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;
    fn try_from(p: [usize; 2]) -> Result<Self> {
        Edge::new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// Finite simple undirected graph with sorted adjacency lists.
///
/// Edges are ranked lexicographically by `(u, v)`; that rank is the vertex
/// index of the edge in the line graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    // edge_offset[u] = number of edges (a, b) with a < u
    edge_offset: Vec<usize>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field(
                "edges",
                &self.edges().map(|e| (e.u, e.v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Small named graphs the theorems single out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialClass {
    P2,
    Q,
    LQ,
    Path,
    Cycle3,
    Cycle4,
    Cycle5,
    CycleLong,
    Claw,
    SingleVertex,
    Empty,
    Other,
}

impl SpecialClass {
    pub fn is_cycle(self) -> bool {
        matches!(
            self,
            SpecialClass::Cycle3
                | SpecialClass::Cycle4
                | SpecialClass::Cycle5
                | SpecialClass::CycleLong
        )
    }

    /// Graphs on which the line-graph lift fails to be a group isomorphism.
    pub fn is_lift_exception(self) -> bool {
        matches!(self, SpecialClass::P2 | SpecialClass::Q | SpecialClass::LQ)
    }
}

impl Graph {
    pub fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Self::from_sorted_adjacency(adj))
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        Self::build(n, edges.iter().map(|e| (e.u, e.v)))
    }

    /// Caller guarantees the adjacency lists already satisfy every invariant.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        let mut edge_offset = Vec::with_capacity(adj.len());
        let mut count = 0;
        for (u, list) in adj.iter().enumerate() {
            edge_offset.push(count);
            count += list.iter().filter(|&&w| w > u).count();
        }
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v)));
        Graph {
            adj,
            edge_offset,
            edge_count: count,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Lexicographic rank of the edge `{a, b}`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        if u == v || v >= self.n() {
            return None;
        }
        let list = &self.adj[u];
        let pos = list.binary_search(&v).ok()?;
        let first_above = list.partition_point(|&w| w < u);
        Some(self.edge_offset[u] + pos - first_above)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| v > u)
                .map(move |&v| Edge { u, v })
        })
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Induced subgraph on `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for (v, list) in self.adj.iter().enumerate() {
            adj[perm[v]] = list.iter().map(|&w| perm[w]).collect();
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        Graph::from_sorted_adjacency(adj)
    }

    pub fn classify_special(&self) -> SpecialClass {
        let n = self.n();
        let m = self.edge_count;
        if n == 0 {
            return SpecialClass::Empty;
        }
        if n == 1 {
            return SpecialClass::SingleVertex;
        }
        if !self.is_connected() {
            return SpecialClass::Other;
        }
        if n == 2 {
            return SpecialClass::P2;
        }
        let degrees = self.degrees();
        if m + 1 == n && degrees.iter().all(|&d| d <= 2) {
            return SpecialClass::Path;
        }
        if m == n && degrees.iter().all(|&d| d == 2) {
            return match n {
                3 => SpecialClass::Cycle3,
                4 => SpecialClass::Cycle4,
                5 => SpecialClass::Cycle5,
                _ => SpecialClass::CycleLong,
            };
        }
        if n == 4 {
            if is_isomorphic_small(self, &Graph::claw()) {
                return SpecialClass::Claw;
            }
            if is_isomorphic_small(self, &Graph::paw()) {
                return SpecialClass::Q;
            }
            if is_isomorphic_small(self, &Graph::diamond()) {
                return SpecialClass::LQ;
            }
        }
        SpecialClass::Other
    }
}

/// Exhaustive isomorphism test over all vertex bijections. Only for tiny graphs.
pub(crate) fn is_isomorphic_small(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut found = false;
    crate::util::for_each_permutation(a.n(), |p| {
        if !found && a.edges().all(|e| b.has_edge(p[e.u], p[e.v])) {
            found = true;
        }
    });
    found
}

/// Standard families used throughout tests and examples.
impl Graph {
    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    pub fn path(n: usize) -> Graph {
        Graph::build(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// Panics for `n < 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::build(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// `K_{1,leaves}` with the hub at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::build(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    pub fn claw() -> Graph {
        Graph::star(3)
    }

    /// Triangle 0-1-2 with the pendant edge 2-3.
    pub fn paw() -> Graph {
        Graph::build(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).expect("paw edges are valid")
    }

    /// `K_4` minus the edge 0-3.
    pub fn diamond() -> Graph {
        Graph::build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("diamond edges are valid")
    }

    /// An edge 0-1 with `leaves` pendant vertices on each endpoint.
    pub fn double_star(leaves: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        for i in 0..leaves {
            edges.push((0, 2 + i));
            edges.push((1, 2 + leaves + i));
        }
        Graph::build(2 + 2 * leaves, edges).expect("double star edges are valid")
    }
}
