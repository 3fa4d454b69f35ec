//! Distinguishing numbers of iterated line graphs.
//!
//! The crate builds iterated line graphs with full provenance, lifts graph
//! automorphisms through every iteration, groups the vertices of `L^{2m}(G)`
//! into clusters over the vertices of `G`, and constructs checkable two-color
//! symmetry-breaking certificates from those clusters. For trees it decides
//! exactly when one line-graph step raises the distinguishing number.
//!
//! All vertex sets are dense indices `0..n`; permutations, colorings and
//! provenance tables are arrays indexed by vertex.

pub mod autgroup;
pub mod certificate;
pub mod cli;
pub mod distinguish;
mod error;
pub mod format;
pub mod graph;
pub mod linegraph;
pub mod treesym;
mod util;

pub use autgroup::{automorphisms, lift, lift_chain, verify_sabidussi, AutGroup, Permutation};
pub use certificate::{break_symmetry, verify_certificate, BreakCertificate};
pub use distinguish::{distinguishing_number, is_distinguishing, Coloring};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, SpecialClass};
pub use linegraph::{clusters, iterate, line_graph, ClusterFamily, IterationChain, Provenance};
pub use util::{binomial, ceil_log3};

/// Resource caps shared by every search in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph any iteration may produce; also bounds automorphism search.
    pub vertex_cap: usize,
    /// Largest automorphism group materialized as an element list.
    pub group_cap: usize,
    /// Elementary steps allowed for a single exhaustive search.
    pub work_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: 1_000_000,
            group_cap: 1_000_000,
            work_cap: 1_000_000_000,
        }
    }
}
