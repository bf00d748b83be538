//! Approximate p-centers and (p+1)-packings on unweighted connected graphs
//! whose shortest-path metric is close to a tree (small Gromov hyperbolicity).
//!
//! ```
//! use hypercenter::{solve, Algo, Graph, SolveOptions};
//!
//! let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
//! let sol = solve(&g, 2, Algo::Auto, &SolveOptions::default()).unwrap();
//! assert_eq!(sol.radius, 2);
//! assert!(sol.lower_bound <= sol.radius);
//! ```

#![allow(clippy::needless_range_loop)]

pub mod bfs;
pub mod diametric;
pub mod error;
pub mod graph;
pub mod hyperbolicity;
pub mod io;
pub mod pcenter;
pub mod solution;
pub mod tree;

pub use bfs::{bfs, bfs_distances, evaluate_radius, geodesic, point_along, DistanceField, UNREACHED};
pub use diametric::{chepoi_one_center, locally_diametrical_pair, one_center, two_center, DiametricalPair};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use hyperbolicity::{lambda_n, HalfInt, HyperbolicityReport};
pub use io::{load_edge_list, Label, LoadedGraph};
pub use pcenter::{solve, SolveOptions};
pub use solution::{Algo, CenterSolution};
