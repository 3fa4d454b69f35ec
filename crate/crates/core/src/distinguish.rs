//! Symmetry-breaking colorings: checking them, finding optimal ones by
//! exhaustive search, rooted class counts, and the small numeric bounds
//! around the two-coloring construction.

use serde::{Deserialize, Serialize};

use crate::autgroup::{automorphisms, automorphisms_preserving, AutGroup};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpecialClass};
use crate::linegraph::iterate;
use crate::util::{binomial, ceil_log3};
use crate::Limits;

/// A total map from vertices to colors `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&bad) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: k + 1,
            });
        }
        Ok(Coloring { k, colors })
    }

    pub fn uniform(n: usize) -> Self {
        Coloring {
            k: usize::from(n > 0),
            colors: vec![1; n],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> usize {
        self.colors[v]
    }
}

/// True iff every nonidentity element of `group` moves some vertex onto a
/// vertex of a different color.
pub fn is_distinguishing(g: &Graph, coloring: &Coloring, group: &AutGroup) -> Result<bool> {
    for len in [coloring.len(), group.host().n()] {
        if len != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                actual: len,
            });
        }
    }
    Ok(breaks_all(coloring.colors(), group))
}

pub(crate) fn breaks_all(colors: &[usize], group: &AutGroup) -> bool {
    group.nontrivial().all(|p| {
        colors
            .iter()
            .enumerate()
            .any(|(v, &c)| colors[p.apply(v)] != c)
    })
}

/// Exact `D(G)` with a witness coloring. `D` of the empty graph is 0.
pub fn distinguishing_number(g: &Graph, limits: &Limits) -> Result<(usize, Coloring)> {
    distinguishing_number_bounded(g, None, limits)
}

/// As [`distinguishing_number`], giving up beyond `max_colors`.
pub fn distinguishing_number_bounded(
    g: &Graph,
    max_colors: Option<usize>,
    limits: &Limits,
) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Ok((0, Coloring::uniform(0)));
    }
    let group = automorphisms(g, limits)?;
    distinguishing_number_with_group(&group, max_colors, limits)
}

pub fn distinguishing_number_with_group(
    group: &AutGroup,
    max_colors: Option<usize>,
    limits: &Limits,
) -> Result<(usize, Coloring)> {
    let n = group.host().n();
    if n == 0 {
        return Ok((0, Coloring::uniform(0)));
    }
    if group.is_trivial() {
        return Ok((1, Coloring::uniform(n)));
    }
    let top = max_colors.unwrap_or(n).min(n);
    for k in 2..=top {
        if let Some(c) = find_distinguishing_coloring(group, k, &[], limits)? {
            return Ok((k, c));
        }
    }
    Err(Error::ColorCapExceeded { max: top })
}

/// Depth-first search for a distinguishing `k`-coloring of the group's host.
///
/// Vertices are colored in index order. Colors are introduced in order of
/// first use, which loses nothing because relabeling colors preserves the
/// property. A partial coloring is abandoned once some nonidentity element
/// that moves only colored vertices preserves it. Each pair `(a, b)` in
/// `ties` forces `b` to take the color of `a`.
pub fn find_distinguishing_coloring(
    group: &AutGroup,
    k: usize,
    ties: &[(usize, usize)],
    limits: &Limits,
) -> Result<Option<Coloring>> {
    let n = group.host().n();
    let mut tie = vec![None; n];
    for &(a, b) in ties {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        if hi >= n {
            return Err(Error::IndexOutOfRange { index: hi, len: n });
        }
        if lo != hi {
            tie[hi] = Some(lo);
        }
    }
    let elements: Vec<&[usize]> = group.nontrivial().map(|p| p.images()).collect();
    let inverses: Vec<Vec<usize>> = group
        .nontrivial()
        .map(|p| p.inverse().images().to_vec())
        .collect();
    let last_moved: Vec<usize> = elements
        .iter()
        .map(|p| (0..n).rev().find(|&v| p[v] != v).unwrap_or(0))
        .collect();
    let mut search = ColoringSearch {
        n,
        k,
        tie,
        elements,
        inverses,
        last_moved,
        colors: vec![0; n],
        work: 0,
        cap: limits.work_cap,
    };
    let alive: Vec<u32> = (0..search.elements.len() as u32).collect();
    if search.dfs(0, 0, &alive)? {
        Ok(Some(Coloring::new(search.colors, k)?))
    } else {
        Ok(None)
    }
}

struct ColoringSearch<'a> {
    n: usize,
    k: usize,
    tie: Vec<Option<usize>>,
    elements: Vec<&'a [usize]>,
    inverses: Vec<Vec<usize>>,
    last_moved: Vec<usize>,
    colors: Vec<usize>,
    work: u64,
    cap: u64,
}

impl ColoringSearch<'_> {
    fn dfs(&mut self, d: usize, max_used: usize, alive: &[u32]) -> Result<bool> {
        if alive.is_empty() {
            for v in d..self.n {
                self.colors[v] = self.tie[v].map_or(1, |a| self.colors[a]);
            }
            return Ok(true);
        }
        if d == self.n {
            return Ok(false);
        }
        let choices: Vec<usize> = match self.tie[d] {
            Some(a) => vec![self.colors[a]],
            None => (1..=self.k.min(max_used + 1)).collect(),
        };
        for c in choices {
            self.work += alive.len() as u64 + 1;
            if self.work > self.cap {
                return Err(Error::WorkCapExceeded { cap: self.cap });
            }
            self.colors[d] = c;
            let colors = &self.colors;
            let next: Vec<u32> = alive
                .iter()
                .copied()
                .filter(|&i| {
                    let fwd = self.elements[i as usize][d];
                    let back = self.inverses[i as usize][d];
                    (fwd > d || colors[fwd] == c) && (back > d || colors[back] == c)
                })
                .collect();
            if next.iter().any(|&i| self.last_moved[i as usize] <= d) {
                continue;
            }
            if self.dfs(d + 1, max_used.max(c), &next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Least `k >= 0` with minimum degree of `L^k(G)` at least 3.
pub fn min_degree_stabilization(g: &Graph, limits: &Limits) -> Result<usize> {
    check_iterable(g)?;
    let mut chain = crate::linegraph::IterationChain::new(g);
    while chain.top().min_degree()? < 3 {
        chain.extend(limits)?;
    }
    Ok(chain.len())
}

/// Connected, and not a graph whose line graphs never reach minimum degree 3.
pub(crate) fn check_iterable(g: &Graph) -> Result<SpecialClass> {
    let class = g.classify_special();
    match class {
        SpecialClass::Path
        | SpecialClass::P2
        | SpecialClass::Claw
        | SpecialClass::SingleVertex
        | SpecialClass::Empty => Err(Error::IneligibleGraph(format!("{class:?}"))),
        c if c.is_cycle() => Err(Error::IneligibleGraph(format!("{class:?}"))),
        _ if !g.is_connected() => Err(Error::Disconnected),
        _ => Ok(class),
    }
}

/// Number of orbits of distinguishing `k`-colorings, where both the
/// distinguishing condition and the orbits are taken with respect to the
/// automorphisms fixing `root`.
pub fn rooted_sb_count(g: &Graph, root: usize, k: usize, limits: &Limits) -> Result<u64> {
    let n = g.n();
    if root >= n {
        return Err(Error::IndexOutOfRange {
            index: root,
            len: n,
        });
    }
    if k == 0 {
        return Ok(0);
    }
    let mut labels = vec![0; n];
    labels[root] = 1;
    let stabilizer = automorphisms_preserving(g, &labels, limits)?;
    let total = (k as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= limits.work_cap)
        .ok_or(Error::WorkCapExceeded {
            cap: limits.work_cap,
        })?;
    if total.saturating_mul(stabilizer.order() as u64) > limits.work_cap {
        return Err(Error::WorkCapExceeded {
            cap: limits.work_cap,
        });
    }
    let mut seen = vec![0u64; (total as usize).div_ceil(64)];
    let mut colors = vec![0usize; n];
    let mut image = vec![0usize; n];
    let mut classes = 0;
    for index in 0..total {
        if seen[(index / 64) as usize] >> (index % 64) & 1 == 1 {
            continue;
        }
        decode(index, k, &mut colors);
        if !breaks_all(&colors, &stabilizer) {
            continue;
        }
        classes += 1;
        for p in stabilizer.elements() {
            for v in 0..n {
                image[v] = colors[p.apply(v)];
            }
            let j = encode(&image, k);
            seen[(j / 64) as usize] |= 1 << (j % 64);
        }
    }
    Ok(classes)
}

/// Base-`k` digits, vertex 0 least significant, colors `0..k`.
fn decode(mut index: u64, k: usize, out: &mut [usize]) {
    for c in out.iter_mut() {
        *c = (index % k as u64) as usize;
        index /= k as u64;
    }
}

fn encode(colors: &[usize], k: usize) -> u64 {
    colors
        .iter()
        .rev()
        .fold(0, |acc, &c| acc * k as u64 + c as u64)
}

/// Least `m >= 1` with `C(r + m - 1, m - 1) >= k`: how many colors give at
/// least `k` distinct color-count distributions over `r` vertices.
///
/// Panics if `r == 0` and `k > 1`, where no such `m` exists.
pub fn partition_bound(r: u64, k: u64) -> u64 {
    assert!(r >= 1 || k <= 1, "partition_bound needs r >= 1");
    let mut m = 1;
    while binomial(r + m - 1, m - 1) < k as u128 {
        m += 1;
    }
    m
}

/// Upper bound on the stabilization index from the degree-2 structure of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemarkBound {
    /// Largest component after deleting every vertex of degree at least 3.
    pub p: usize,
    /// `D(L^p(G))`, or `n(L^p(G))` when `exact[0]` is false.
    pub d_at_p: usize,
    /// `D(L^{p+1}(G))`, or its vertex count when `exact[1]` is false.
    pub d_at_p_plus_1: usize,
    pub exact: [bool; 2],
    pub bound: usize,
}

pub fn remark_bound(g: &Graph, limits: &Limits) -> Result<RemarkBound> {
    check_iterable(g)?;
    let low: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < 3).collect();
    let p = g
        .induced(&low)
        .components()
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0);
    let chain = iterate(g, p + 1, limits)?;
    let mut values = [0usize; 2];
    let mut exact = [true; 2];
    for (i, level) in [p, p + 1].into_iter().enumerate() {
        let h = chain.graph_at(level);
        match distinguishing_number(h, limits) {
            Ok((d, _)) => values[i] = d,
            Err(
                Error::WorkCapExceeded { .. }
                | Error::GroupTooLarge { .. }
                | Error::SearchCapExceeded(_)
                | Error::ColorCapExceeded { .. },
            ) => {
                values[i] = h.n();
                exact[i] = false;
            }
            Err(e) => return Err(e),
        }
    }
    let bound = (p + 2 * ceil_log3(values[0])).max(p + 1 + 2 * ceil_log3(values[1]));
    Ok(RemarkBound {
        p,
        d_at_p: values[0],
        d_at_p_plus_1: values[1],
        exact,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    fn d(g: &Graph) -> usize {
        distinguishing_number(g, &limits()).unwrap().0
    }

    /// Tries every coloring with `k` colors against the whole group.
    fn brute_force_exists(g: &Graph, k: usize) -> bool {
        let group = automorphisms(g, &limits()).unwrap();
        let total = (k as u64).pow(g.n() as u32);
        let mut colors = vec![0; g.n()];
        (0..total).any(|i| {
            decode(i, k, &mut colors);
            breaks_all(&colors, &group)
        })
    }

    #[test]
    fn uniform_c4_is_not_distinguishing() {
        let g = Graph::cycle(4);
        let group = automorphisms(&g, &limits()).unwrap();
        assert!(!is_distinguishing(&g, &Coloring::uniform(4), &group).unwrap());
    }

    #[test]
    fn c6_example_coloring() {
        let g = Graph::cycle(6);
        let group = automorphisms(&g, &limits()).unwrap();
        let c = Coloring::new(vec![1, 1, 2, 1, 2, 2], 2).unwrap();
        assert!(is_distinguishing(&g, &c, &group).unwrap());
    }

    #[test]
    fn rigid_graph_accepts_anything() {
        // smallest asymmetric tree: spider with legs 1, 2, 3
        let g = Graph::build(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let group = automorphisms(&g, &limits()).unwrap();
        assert!(group.is_trivial());
        assert!(is_distinguishing(&g, &Coloring::uniform(7), &group).unwrap());
        assert_eq!(d(&g), 1);
    }

    #[test]
    fn size_mismatch() {
        let g = Graph::cycle(4);
        let group = automorphisms(&g, &limits()).unwrap();
        assert!(matches!(
            is_distinguishing(&g, &Coloring::uniform(3), &group),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn coloring_values_checked() {
        assert!(Coloring::new(vec![1, 3], 2).is_err());
        assert!(Coloring::new(vec![0], 2).is_err());
    }

    #[test]
    fn known_values() {
        assert_eq!(d(&Graph::cycle(5)), 3);
        assert_eq!(d(&Graph::cycle(6)), 2);
        assert_eq!(d(&Graph::claw()), 3);
        assert_eq!(d(&Graph::complete(4)), 4);
        assert_eq!(d(&Graph::path(1)), 1);
        assert_eq!(d(&Graph::empty(0)), 0);
    }

    #[test]
    fn search_agrees_with_brute_force() {
        let graphs = [
            Graph::cycle(5),
            Graph::cycle(6),
            Graph::claw(),
            Graph::complete(4),
            Graph::paw(),
            Graph::diamond(),
            Graph::double_star(2),
            Graph::star(4),
            Graph::path(5),
        ];
        for g in &graphs {
            let (k, witness) = distinguishing_number(g, &limits()).unwrap();
            let group = automorphisms(g, &limits()).unwrap();
            assert!(is_distinguishing(g, &witness, &group).unwrap());
            assert!(brute_force_exists(g, k), "{g:?}");
            assert!(k == 1 || !brute_force_exists(g, k - 1), "{g:?}");
        }
    }

    #[test]
    fn ties_are_respected() {
        let g = Graph::double_star(2);
        let group = automorphisms(&g, &limits()).unwrap();
        assert!(find_distinguishing_coloring(&group, 2, &[], &limits())
            .unwrap()
            .is_some());
        assert!(
            find_distinguishing_coloring(&group, 2, &[(0, 1)], &limits())
                .unwrap()
                .is_none()
        );
        let c = find_distinguishing_coloring(&group, 3, &[(0, 1)], &limits())
            .unwrap()
            .unwrap();
        assert_eq!(c.get(0), c.get(1));
    }

    #[test]
    fn work_cap() {
        let tight = Limits {
            work_cap: 10,
            ..Limits::default()
        };
        let group = automorphisms(&Graph::complete(6), &limits()).unwrap();
        assert!(matches!(
            distinguishing_number_with_group(&group, None, &tight),
            Err(Error::WorkCapExceeded { .. })
        ));
    }

    #[test]
    fn color_cap() {
        assert!(matches!(
            distinguishing_number_bounded(&Graph::complete(5), Some(3), &limits()),
            Err(Error::ColorCapExceeded { max: 3 })
        ));
    }

    #[test]
    fn stabilization_indices() {
        assert_eq!(
            min_degree_stabilization(&Graph::complete(4), &limits()).unwrap(),
            0
        );
        assert_eq!(
            min_degree_stabilization(&Graph::star(4), &limits()).unwrap(),
            1
        );
        assert_eq!(
            min_degree_stabilization(&Graph::paw(), &limits()).unwrap(),
            2
        );
        for g in [
            Graph::cycle(7),
            Graph::path(4),
            Graph::claw(),
            Graph::path(1),
        ] {
            assert!(matches!(
                min_degree_stabilization(&g, &limits()),
                Err(Error::IneligibleGraph(_))
            ));
        }
        let two_triangles =
            Graph::build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(
            min_degree_stabilization(&two_triangles, &limits()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn rooted_counts() {
        for k in 1..5 {
            assert_eq!(
                rooted_sb_count(&Graph::path(1), 0, k, &limits()).unwrap(),
                k as u64
            );
        }
        assert_eq!(
            rooted_sb_count(&Graph::path(2), 0, 2, &limits()).unwrap(),
            4
        );
        // cherry rooted at its middle vertex
        assert_eq!(
            rooted_sb_count(&Graph::path(3), 1, 2, &limits()).unwrap(),
            2
        );
    }

    #[test]
    fn rooted_counts_match_orbit_size_formula() {
        // Distinguishing colorings have trivial stabilizers, so every orbit
        // has exactly |A| members.
        let cases = [
            (Graph::star(3), 0),
            (Graph::star(3), 1),
            (Graph::path(5), 2),
            (Graph::cycle(5), 0),
            (Graph::double_star(2), 0),
            (Graph::complete(4), 3),
        ];
        for (g, root) in &cases {
            let mut labels = vec![0; g.n()];
            labels[*root] = 1;
            let a = automorphisms_preserving(g, &labels, &limits()).unwrap();
            for k in 1..4 {
                let total = (k as u64).pow(g.n() as u32);
                let mut colors = vec![0; g.n()];
                let good = (0..total)
                    .filter(|&i| {
                        decode(i, k, &mut colors);
                        breaks_all(&colors, &a)
                    })
                    .count() as u64;
                assert_eq!(good % a.order() as u64, 0);
                assert_eq!(
                    rooted_sb_count(g, *root, k, &limits()).unwrap(),
                    good / a.order() as u64,
                    "{g:?} root {root} k {k}"
                );
            }
        }
    }

    #[test]
    fn partition_bounds() {
        for r in 1..10 {
            assert_eq!(partition_bound(r, 1), 1);
        }
        assert_eq!(partition_bound(2, 3), 2);
        assert_eq!(partition_bound(5, 6), 2);
        assert_eq!(partition_bound(5, 7), 3);
        assert_eq!(partition_bound(1, 4), 4);
    }

    #[test]
    fn remark_bound_on_k4() {
        let r = remark_bound(&Graph::complete(4), &limits()).unwrap();
        assert_eq!(r.p, 0);
        assert_eq!(r.d_at_p, 4);
        let d_line = d(&crate::line_graph(&Graph::complete(4)).child().clone());
        assert_eq!(r.d_at_p_plus_1, d_line);
        assert_eq!(r.bound, (2 * ceil_log3(4)).max(1 + 2 * ceil_log3(d_line)));
        assert_eq!(r.exact, [true, true]);
    }

    #[test]
    fn remark_bound_on_paw() {
        // deleting the degree-3 vertex leaves the edge 0-1 and the pendant 3
        let r = remark_bound(&Graph::paw(), &limits()).unwrap();
        assert_eq!(r.p, 2);
        let chain = iterate(&Graph::paw(), 3, &limits()).unwrap();
        assert_eq!(r.d_at_p, d(chain.graph_at(2)));
        assert_eq!(r.d_at_p_plus_1, d(chain.graph_at(3)));
    }

    #[test]
    fn dense_graph_has_p_zero() {
        let r = remark_bound(&Graph::complete(5), &limits()).unwrap();
        assert_eq!(r.p, 0);
    }
}
