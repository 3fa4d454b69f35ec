//! Individualization-refinement backtracking that enumerates every
//! automorphism of a graph.
//!
//! Two ordered partitions are refined in lockstep: the left one individualizes
//! a fixed vertex of the first non-singleton cell, the right one tries each
//! vertex of the matching cell. Refinement depends only on cell indices, so an
//! automorphism mapping the left choices to the right choices maps the left
//! refined partition onto the right one cell by cell. Every automorphism
//! therefore survives to exactly one discrete leaf.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Limits;

/// Vertex colors normalized to `0..cells`.
#[derive(Clone, Debug)]
pub(crate) struct Partition {
    color: Vec<u32>,
    cells: usize,
}

impl Partition {
    /// Normalizes arbitrary labels, keeping their relative order.
    pub(crate) fn from_labels(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let color = labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("label present") as u32)
            .collect();
        Partition {
            color,
            cells: distinct.len(),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.color.len()
    }

    fn cell_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.cells];
        for &c in &self.color {
            sizes[c as usize] += 1;
        }
        sizes
    }

    fn members(&self, cell: u32) -> Vec<usize> {
        (0..self.color.len())
            .filter(|&v| self.color[v] == cell)
            .collect()
    }

    /// Splits `v` off in front of the rest of its cell.
    fn individualize(&self, v: usize) -> Partition {
        let labels: Vec<usize> = self
            .color
            .iter()
            .enumerate()
            .map(|(x, &c)| 2 * c as usize + usize::from(x != v))
            .collect();
        Partition::from_labels(&labels)
    }

    /// Refines to the coarsest equitable partition below `self`.
    fn refine(&mut self, g: &Graph) {
        let n = self.color.len();
        let mut signature: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut order: Vec<usize> = (0..n).collect();
        loop {
            for (v, sig) in signature.iter_mut().enumerate() {
                sig.clear();
                sig.extend(g.neighbors(v).iter().map(|&w| self.color[w]));
                sig.sort_unstable();
            }
            order.sort_by(|&a, &b| {
                self.color[a]
                    .cmp(&self.color[b])
                    .then_with(|| signature[a].cmp(&signature[b]))
            });
            let mut next = vec![0u32; n];
            let mut cells = 0u32;
            for (i, &v) in order.iter().enumerate() {
                if i > 0 {
                    let u = order[i - 1];
                    if self.color[u] != self.color[v] || signature[u] != signature[v] {
                        cells += 1;
                    }
                }
                next[v] = cells;
            }
            let cells = if n == 0 { 0 } else { cells as usize + 1 };
            let stable = cells == self.cells;
            self.color = next;
            self.cells = cells;
            if stable {
                break;
            }
        }
    }

    /// Neighbor counts from each cell into every cell; equal for two
    /// partitions that an automorphism maps onto each other.
    fn quotient(&self, g: &Graph) -> Vec<u32> {
        let mut rep = vec![usize::MAX; self.cells];
        for (v, &c) in self.color.iter().enumerate() {
            if rep[c as usize] == usize::MAX {
                rep[c as usize] = v;
            }
        }
        let mut q = vec![0u32; self.cells * self.cells];
        for (c, &v) in rep.iter().enumerate() {
            for &w in g.neighbors(v) {
                q[c * self.cells + self.color[w] as usize] += 1;
            }
        }
        q
    }
}

struct Search<'a> {
    g: &'a Graph,
    limits: &'a Limits,
    found: Vec<Vec<usize>>,
    stop_after_nontrivial: bool,
    work: u64,
}

impl Search<'_> {
    fn charge(&mut self, amount: u64) -> Result<()> {
        self.work += amount;
        if self.work > self.limits.work_cap {
            return Err(Error::SearchCapExceeded(format!(
                "more than {} refinement steps",
                self.limits.work_cap
            )));
        }
        Ok(())
    }

    fn done(&self) -> bool {
        self.stop_after_nontrivial
            && self
                .found
                .iter()
                .any(|p| p.iter().enumerate().any(|(i, &x)| i != x))
    }

    fn recurse(&mut self, left: &Partition, right: &Partition) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        self.charge((self.g.n() + 2 * self.g.edge_count()) as u64 + 1)?;
        if left.is_discrete() {
            let mut by_cell = vec![0usize; left.cells];
            for (w, &c) in right.color.iter().enumerate() {
                by_cell[c as usize] = w;
            }
            let perm: Vec<usize> = left.color.iter().map(|&c| by_cell[c as usize]).collect();
            if self
                .g
                .edges()
                .all(|e| self.g.has_edge(perm[e.u()], perm[e.v()]))
            {
                self.found.push(perm);
                if self.found.len() > self.limits.group_cap {
                    return Err(Error::GroupTooLarge {
                        cap: self.limits.group_cap,
                    });
                }
            }
            return Ok(());
        }
        let sizes = left.cell_sizes();
        let target = sizes
            .iter()
            .position(|&s| s > 1)
            .expect("non-discrete partition has a large cell") as u32;
        let v = left.members(target)[0];
        let mut l = left.individualize(v);
        l.refine(self.g);
        let l_sizes = l.cell_sizes();
        let l_quotient = l.quotient(self.g);
        for w in right.members(target) {
            let mut r = right.individualize(w);
            r.refine(self.g);
            if r.cell_sizes() == l_sizes && r.quotient(self.g) == l_quotient {
                self.recurse(&l, &r)?;
            }
        }
        Ok(())
    }
}

fn run(g: &Graph, labels: &[usize], limits: &Limits, stop_early: bool) -> Result<Vec<Vec<usize>>> {
    if g.n() > limits.vertex_cap {
        return Err(Error::SearchCapExceeded(format!(
            "{} vertices exceeds the cap of {}",
            g.n(),
            limits.vertex_cap
        )));
    }
    let mut root = Partition::from_labels(labels);
    root.refine(g);
    let mut search = Search {
        g,
        limits,
        found: Vec::new(),
        stop_after_nontrivial: stop_early,
        work: 0,
    };
    search.recurse(&root, &root)?;
    Ok(search.found)
}

/// All automorphisms of `g` that map each label class onto itself.
pub(crate) fn enumerate(g: &Graph, labels: &[usize], limits: &Limits) -> Result<Vec<Vec<usize>>> {
    run(g, labels, limits, false)
}

/// Whether some nonidentity automorphism preserves the label classes.
pub(crate) fn has_nontrivial(g: &Graph, labels: &[usize], limits: &Limits) -> Result<bool> {
    let found = run(g, labels, limits, true)?;
    Ok(found
        .iter()
        .any(|p| p.iter().enumerate().any(|(i, &x)| i != x)))
}
