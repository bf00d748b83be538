use std::fmt;

use serde::Serialize;

use crate::graph::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    /// `one_center` for p = 1, `two_center` for p = 2, the packing optimiser otherwise.
    Auto,
    /// Packing optimiser regardless of p.
    General,
    /// Exact p-center on the layering-partition tree, evaluated in the graph.
    Tree,
    /// Two-BFS midpoint baseline, p = 1 only.
    Chepoi1,
    /// Exhaustive search (small instances only).
    Brute,
}

impl Algo {
    pub fn as_str(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::General => "general",
            Algo::Tree => "tree",
            Algo::Chepoi1 => "chepoi1",
            Algo::Brute => "brute",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Chosen centers with their achieved radius and a packing-based lower bound.
///
/// `kappa` is the minimum pairwise distance of a `p + 1`-vertex packing found
/// along the way; any `p` centers must leave two packing members sharing a
/// center, so `lower_bound = ⌈kappa / 2⌉` bounds the optimal vertex p-radius
/// from below.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterSolution {
    pub p: usize,
    pub algo: Algo,
    pub centers: Vec<Vertex>,
    pub radius: u32,
    pub witness: Vertex,
    pub kappa: u32,
    pub lower_bound: u32,
    pub rounds: u32,
    pub phi_history: Vec<u64>,
    pub bfs_total: u64,
}
