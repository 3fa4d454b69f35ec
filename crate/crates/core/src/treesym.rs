//! Trees: center and leaf peeling, the edge associated with each vertex,
//! branches hanging off the center, and the exact test for whether one
//! line-graph step raises the distinguishing number.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::autgroup::automorphisms;
use crate::distinguish::{
    distinguishing_number, distinguishing_number_with_group, find_distinguishing_coloring,
    rooted_sb_count, Coloring,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::linegraph::line_graph;
use crate::Limits;

fn require_tree(t: &Graph) -> Result<()> {
    if t.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// Leaf layers `lf(T_0), lf(T_1), ...`; the last layer is the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelingSequence {
    layers: Vec<Vec<usize>>,
    #[serde(skip)]
    layer_of: Vec<usize>,
}

impl PeelingSequence {
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn layer_of(&self, v: usize) -> usize {
        self.layer_of[v]
    }

    pub fn center(&self) -> &[usize] {
        self.layers.last().map_or(&[], Vec::as_slice)
    }
}

/// Strips leaves until at most two vertices remain.
pub fn peel(t: &Graph) -> Result<PeelingSequence> {
    require_tree(t)?;
    let n = t.n();
    let mut degree = t.degrees();
    let mut layer_of = vec![usize::MAX; n];
    let mut layers = Vec::new();
    let mut remaining = n;
    let mut current: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let depth = layers.len();
        for &v in &current {
            layer_of[v] = depth;
        }
        remaining -= current.len();
        let mut next = Vec::new();
        for &v in &current {
            for &w in t.neighbors(v) {
                if layer_of[w] == usize::MAX {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        next.sort_unstable();
        layers.push(std::mem::replace(&mut current, next));
    }
    let core: Vec<usize> = (0..n).filter(|&v| layer_of[v] == usize::MAX).collect();
    if !core.is_empty() {
        for &v in &core {
            layer_of[v] = layers.len();
        }
        layers.push(core);
    }
    Ok(PeelingSequence { layers, layer_of })
}

/// `e_v` for every non-center vertex, plus the center edge if there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeAssociation {
    assoc: Vec<Option<Edge>>,
    center_edge: Option<Edge>,
}

impl EdgeAssociation {
    /// `None` exactly for center vertices.
    pub fn edge(&self, v: usize) -> Option<Edge> {
        self.assoc[v]
    }

    pub fn center_edge(&self) -> Option<Edge> {
        self.center_edge
    }

    pub fn as_slice(&self) -> &[Option<Edge>] {
        &self.assoc
    }
}

pub fn edge_assoc(t: &Graph) -> Result<EdgeAssociation> {
    let peeling = peel(t)?;
    Ok(associate(t, &peeling))
}

fn associate(t: &Graph, peeling: &PeelingSequence) -> EdgeAssociation {
    let top = peeling.layers.len().saturating_sub(1);
    let assoc = (0..t.n())
        .map(|v| {
            let layer = peeling.layer_of(v);
            if layer == top {
                return None;
            }
            let up = t
                .neighbors(v)
                .iter()
                .copied()
                .find(|&w| peeling.layer_of(w) > layer)
                .expect("a peeled leaf keeps one deeper neighbor");
            Some(Edge::new(v, up).expect("tree has no loops"))
        })
        .collect();
    let center = peeling.center();
    let center_edge =
        (center.len() == 2).then(|| Edge::new(center[0], center[1]).expect("distinct"));
    EdgeAssociation { assoc, center_edge }
}

/// Canonical string of the subtree at `root`, never entering `blocked`.
fn rooted_code(t: &Graph, root: usize, blocked: &[usize]) -> String {
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; t.n()];
    parent[root] = root;
    for &b in blocked {
        if b != root {
            parent[b] = b;
        }
    }
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let mut children: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let mut code = String::new();
    for &v in order.iter().rev() {
        let mut kids = children.remove(&v).unwrap_or_default();
        kids.sort_unstable();
        code = format!("({})", kids.concat());
        if v != root {
            children.entry(parent[v]).or_default().push(code.clone());
        }
    }
    code
}

/// Isomorphism-invariant code of a tree; equal codes mean isomorphic trees.
pub fn canonical_code(t: &Graph) -> Result<String> {
    let peeling = peel(t)?;
    Ok(match *peeling.center() {
        [] => String::new(),
        [c] => rooted_code(t, c, &[]),
        [u, w] => {
            let a = rooted_code(t, u, &[w]);
            let b = rooted_code(t, w, &[u]);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            format!("[{lo}{hi}]")
        }
        _ => unreachable!("center has at most two vertices"),
    })
}

/// A component of `T - C(T)` and its vertex adjacent to the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub root: usize,
    pub vertices: Vec<usize>,
    pub class: usize,
    /// The center vertex the root is attached to.
    pub attached_to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeDecomposition {
    #[serde(skip)]
    tree: Graph,
    #[serde(skip)]
    peeling: PeelingSequence,
    center: Vec<usize>,
    branches: Vec<Branch>,
    classes: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn peeling(&self) -> &PeelingSequence {
        &self.peeling
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    /// Branch indices grouped by rooted isomorphism type.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    fn side(&self, k: usize) -> Option<Vec<usize>> {
        let c = *self.center.get(1)?;
        let c = if k == 0 { self.center[0] } else { c };
        Some(
            (0..self.branches.len())
                .filter(|&i| self.branches[i].attached_to == c)
                .collect(),
        )
    }

    /// Branches attached to the first center vertex, when the center is an edge.
    pub fn side_u(&self) -> Option<Vec<usize>> {
        self.side(0)
    }

    pub fn side_w(&self) -> Option<Vec<usize>> {
        self.side(1)
    }

    /// The branch as a standalone rooted tree; the root is vertex 0 and the
    /// remaining vertices follow in increasing original index.
    pub fn branch_graph(&self, i: usize) -> Result<(Graph, usize)> {
        let b = self.branch(i)?;
        let mut order = vec![b.root];
        order.extend(b.vertices.iter().copied().filter(|&v| v != b.root));
        Ok((self.tree.induced(&order), 0))
    }

    fn branch(&self, i: usize) -> Result<&Branch> {
        self.branches.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.branches.len(),
        })
    }
}

pub fn decompose(t: &Graph) -> Result<TreeDecomposition> {
    let peeling = peel(t)?;
    let center = peeling.center().to_vec();
    let n = t.n();
    let mut seen = vec![false; n];
    for &c in &center {
        seen[c] = true;
    }
    let mut branches = Vec::new();
    let mut codes = Vec::new();
    for &c in &center {
        for &root in t.neighbors(c) {
            if seen[root] {
                continue;
            }
            let mut vertices = vec![root];
            seen[root] = true;
            let mut i = 0;
            while i < vertices.len() {
                for &w in t.neighbors(vertices[i]) {
                    if !seen[w] {
                        seen[w] = true;
                        vertices.push(w);
                    }
                }
                i += 1;
            }
            vertices.sort_unstable();
            codes.push(rooted_code(t, root, &center));
            branches.push(Branch {
                root,
                vertices,
                class: 0,
                attached_to: c,
            });
        }
    }
    let mut class_of: BTreeMap<&str, usize> = BTreeMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, code) in codes.iter().enumerate() {
        let next = classes.len();
        let id = *class_of.entry(code.as_str()).or_insert(next);
        if id == next {
            classes.push(Vec::new());
        }
        classes[id].push(i);
        branches[i].class = id;
    }
    Ok(TreeDecomposition {
        tree: t.clone(),
        peeling,
        center,
        branches,
        classes,
    })
}

/// The subgraph `S'_i` of `L(T)` on the edges `e_v`, `v` in branch `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBranch {
    pub graph: Graph,
    /// Index of `e_{v_i}` in `graph`.
    pub root: usize,
    /// `L(T)` vertex of each local vertex.
    pub members: Vec<usize>,
}

pub fn line_branch(dec: &TreeDecomposition, i: usize) -> Result<LineBranch> {
    let b = dec.branch(i)?;
    let t = dec.tree();
    let assoc = associate(t, dec.peeling());
    let index = |v: usize| {
        let e = assoc.edge(v).expect("branch vertices are off the center");
        t.edge_index(e.u(), e.v()).expect("associated edge exists")
    };
    let mut members: Vec<usize> = b.vertices.iter().map(|&v| index(v)).collect();
    members.sort_unstable();
    let root_edge = index(b.root);
    let root = members
        .binary_search(&root_edge)
        .expect("root edge is a member");
    let lt = line_graph(t);
    Ok(LineBranch {
        graph: lt.child().induced(&members),
        root,
        members,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassDetail {
    pub class: usize,
    pub branches: usize,
    /// `D(S;k)` for a branch of the class at `k = D(T)`; only computed when
    /// the center is an edge.
    pub m: Option<u64>,
    pub in_u: Option<usize>,
    pub in_w: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub increases: bool,
    pub k: usize,
    pub details: Vec<ClassDetail>,
}

/// Decides `D(T) < D(L(T))` from rooted class counts on the branches.
///
/// With a one-vertex center the answer is no. With a center edge `uw` it is
/// yes iff every class has exactly `D(S;k)` members on each side, `k = D(T)`.
/// Unequal sides rule out automorphisms swapping `u` and `w`.
pub fn predict_increase(t: &Graph, limits: &Limits) -> Result<Prediction> {
    require_tree(t)?;
    if t.n() <= 2 {
        return Err(Error::IneligibleGraph(format!(
            "tree on {} vertices",
            t.n()
        )));
    }
    let dec = decompose(t)?;
    let (k, _) = distinguishing_number(t, limits)?;
    let (u, w) = (dec.side_u(), dec.side_w());
    let mut details = Vec::with_capacity(dec.classes.len());
    for (class, members) in dec.classes.iter().enumerate() {
        let count_in = |side: &Option<Vec<usize>>| {
            side.as_ref()
                .map(|s| members.iter().filter(|i| s.contains(i)).count())
        };
        let m = if dec.center.len() == 2 {
            let (g, root) = dec.branch_graph(members[0])?;
            Some(rooted_sb_count(&g, root, k, limits)?)
        } else {
            None
        };
        details.push(ClassDetail {
            class,
            branches: members.len(),
            m,
            in_u: count_in(&u),
            in_w: count_in(&w),
        });
    }
    let increases = dec.center.len() == 2
        && details.iter().all(|d| {
            let m = d.m.expect("computed for a center edge");
            d.in_u.map(|x| x as u64) == Some(m) && d.in_w.map(|x| x as u64) == Some(m)
        });
    Ok(Prediction {
        increases,
        k,
        details,
    })
}

/// Whether some distinguishing `D(T)`-coloring gives the center one color.
pub fn monochromatic_center_test(t: &Graph, limits: &Limits) -> Result<bool> {
    let peeling = peel(t)?;
    let center = peeling.center();
    if center.len() < 2 {
        return Ok(true);
    }
    let group = automorphisms(t, limits)?;
    let (k, _) = distinguishing_number_with_group(&group, None, limits)?;
    Ok(find_distinguishing_coloring(&group, k, &[(center[0], center[1])], limits)?.is_some())
}

/// All unlabeled trees on `n` vertices, one labeled representative each,
/// ordered by canonical code.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut current = vec![Graph::empty(1)];
    for size in 1..n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &current {
            for v in 0..size {
                let mut edges: Vec<(usize, usize)> = t.edges().map(|e| (e.u(), e.v())).collect();
                edges.push((v, size));
                let grown = Graph::build(size + 1, edges).expect("valid tree");
                let code = canonical_code(&grown).expect("is a tree");
                next.entry(code).or_insert(grown);
            }
        }
        current = next.into_values().collect();
    }
    current
}

/// Decodes a Prüfer sequence of length `n - 2` into a labeled tree.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::SizeMismatch {
            expected: n.saturating_sub(2),
            actual: seq.len(),
        });
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::OutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::build(n, edges)
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeReport {
    pub schema_version: u32,
    pub n: usize,
    pub center: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    pub branches: Vec<Branch>,
    pub prediction: Option<Prediction>,
    pub monochromatic_center: bool,
    pub d_tree: usize,
    pub d_line: Option<usize>,
    pub witness_tree: Coloring,
    pub witness_line: Option<Coloring>,
}

pub fn tree_report(t: &Graph, limits: &Limits) -> Result<TreeReport> {
    let dec = decompose(t)?;
    let (d_tree, witness_tree) = distinguishing_number(t, limits)?;
    let line = (t.n() >= 2)
        .then(|| distinguishing_number(line_graph(t).child(), limits))
        .transpose()?;
    let prediction = (t.n() >= 3)
        .then(|| predict_increase(t, limits))
        .transpose()?;
    Ok(TreeReport {
        schema_version: crate::certificate::SCHEMA_VERSION,
        n: t.n(),
        center: dec.center.clone(),
        layers: dec.peeling.layers.clone(),
        branches: dec.branches.clone(),
        prediction,
        monochromatic_center: monochromatic_center_test(t, limits)?,
        d_tree,
        d_line: line.as_ref().map(|l| l.0),
        witness_tree,
        witness_line: line.map(|l| l.1),
    })
}

/// Counts for all trees of one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub trees: usize,
    pub increase: usize,
    pub equal: usize,
    pub decrease: usize,
    /// Trees where the branch-count prediction disagrees with brute force.
    pub mispredicted: usize,
}

/// Compares `D(T)` with `D(L(T))` over every tree with `3 <= n <= max_n`.
pub fn sweep(max_n: usize, limits: &Limits) -> Result<Vec<SweepRow>> {
    (3..=max_n)
        .map(|n| {
            let outcomes = enumerate_trees(n)
                .par_iter()
                .map(|t| -> Result<(std::cmp::Ordering, bool)> {
                    let (dt, _) = distinguishing_number(t, limits)?;
                    let (dl, _) = distinguishing_number(line_graph(t).child(), limits)?;
                    let predicted = predict_increase(t, limits)?.increases;
                    Ok((dl.cmp(&dt), predicted == (dt < dl)))
                })
                .collect::<Result<Vec<_>>>()?;
            let mut row = SweepRow {
                n,
                trees: outcomes.len(),
                ..SweepRow::default()
            };
            for (ord, agrees) in outcomes {
                match ord {
                    std::cmp::Ordering::Greater => row.increase += 1,
                    std::cmp::Ordering::Equal => row.equal += 1,
                    std::cmp::Ordering::Less => row.decrease += 1,
                }
                row.mispredicted += usize::from(!agrees);
            }
            Ok(row)
        })
        .collect()
}
