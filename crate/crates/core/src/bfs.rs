//! Breadth-first distances, canonical geodesics and domination radius.
//!
//! Every tie is broken towards the smallest vertex id: the parent of a vertex
//! is its smallest neighbour one layer closer to the source, and the
//! canonical geodesic `[u, v]` is the reversed parent chain from `v` in the
//! BFS rooted at `u`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Marks "not reached" in distance arrays and "no parent" in parent arrays.
pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    source: Vertex,
    dist: Vec<u32>,
    parent: Vec<u32>,
}

impl DistanceField {
    pub fn source(&self) -> Vertex {
        self.source
    }

    pub fn dist(&self) -> &[u32] {
        &self.dist
    }

    #[inline]
    pub fn distance(&self, v: Vertex) -> u32 {
        self.dist[v]
    }

    /// Parent of `v` on the canonical geodesic, `None` at the source.
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v] {
            UNREACHED => None,
            p => Some(p as Vertex),
        }
    }

    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// All vertices at maximum distance, ascending.
    pub fn farthest(&self) -> (u32, Vec<Vertex>) {
        let ecc = self.eccentricity();
        let set = (0..self.dist.len()).filter(|&v| self.dist[v] == ecc).collect();
        (ecc, set)
    }

    /// Smallest-id vertex at maximum distance.
    pub fn first_farthest(&self) -> (u32, Vertex) {
        let ecc = self.eccentricity();
        let v = self.dist.iter().position(|&d| d == ecc).unwrap_or(0);
        (ecc, v)
    }

    /// Canonical geodesic from the source to `v`.
    pub fn path_to(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = Vec::with_capacity(self.dist[v] as usize + 1);
        let mut cur = v;
        path.push(cur);
        while let Some(p) = self.parent(cur) {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }

    /// The vertex at distance `t` from the source on the canonical geodesic to `v`.
    pub fn point_along(&self, v: Vertex, t: u32) -> Result<Vertex> {
        let d = self.dist[v];
        if t > d {
            return Err(Error::OutOfRange {
                what: "geodesic position",
                value: t as u64,
                min: 0,
                max: d as u64,
            });
        }
        let mut cur = v;
        for _ in 0..(d - t) {
            cur = self.parent[cur] as Vertex;
        }
        Ok(cur)
    }
}

/// Single-source BFS with min-id parents.
pub fn bfs(g: &Graph, source: Vertex) -> DistanceField {
    let n = g.n();
    let mut dist = vec![UNREACHED; n];
    let mut parent = vec![UNREACHED; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == UNREACHED {
                dist[w] = du + 1;
                parent[w] = u as u32;
                queue.push_back(w);
            } else if dist[w] == du + 1 && (u as u32) < parent[w] {
                parent[w] = u as u32;
            }
        }
    }
    DistanceField { source, dist, parent }
}

/// Distances only; cheaper when parents are not needed.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Vec<u32> {
    multi_source_distances(g, &[source])
}

/// Distance from every vertex to its nearest source.
pub fn multi_source_distances(g: &Graph, sources: &[Vertex]) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    for &s in sources {
        if dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &w in g.neighbors(u) {
            let w = w as usize;
            if dist[w] == UNREACHED {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Eccentricity of `u` and every vertex attaining it, ascending.
pub fn farthest_set(g: &Graph, u: Vertex) -> (u32, Vec<Vertex>) {
    bfs(g, u).farthest()
}

pub fn geodesic(g: &Graph, u: Vertex, v: Vertex) -> Vec<Vertex> {
    bfs(g, u).path_to(v)
}

pub fn point_along(g: &Graph, u: Vertex, v: Vertex, t: u32) -> Result<Vertex> {
    bfs(g, u).point_along(v, t)
}

/// Vertex at distance `t` from `from` on the canonical geodesic `[from, to]`,
/// walking from `to` using only a distance row rooted at `from`.
///
/// The min-id neighbour one step closer is exactly the BFS parent, so this
/// reproduces [`point_along`] without storing parent links.
pub fn point_along_row(g: &Graph, row_from: &[u32], to: Vertex, t: u32) -> Vertex {
    let mut cur = to;
    let mut d = row_from[to];
    debug_assert!(t <= d);
    while d > t {
        cur = g
            .neighbors(cur)
            .iter()
            .map(|&w| w as usize)
            .find(|&w| row_from[w] == d - 1)
            .expect("distance row is consistent with the graph");
        d -= 1;
    }
    cur
}

/// Domination radius of `centers` and the smallest-id vertex attaining it.
pub fn evaluate_radius(g: &Graph, centers: &[Vertex]) -> (u32, Vertex) {
    assert!(!centers.is_empty(), "at least one center is required");
    let dist = multi_source_distances(g, centers);
    let mut best = (0, 0);
    for (v, &d) in dist.iter().enumerate() {
        if d > best.0 {
            best = (d, v);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (0..leaves).map(|i| (leaves, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs(&path(3), 0).dist(), &[0, 1, 2]);
        assert_eq!(bfs(&cycle(4), 0).dist(), &[0, 1, 2, 1]);
        let f = bfs(&star(4), 4);
        assert_eq!(f.distance(4), 0);
        assert!((0..4).all(|v| f.distance(v) == 1));
    }

    #[test]
    fn farthest_set_examples() {
        assert_eq!(farthest_set(&path(5), 2), (2, vec![0, 4]));
        assert_eq!(farthest_set(&cycle(6), 0), (3, vec![3]));
        assert_eq!(farthest_set(&star(4), 4), (1, vec![0, 1, 2, 3]));
    }

    #[test]
    fn geodesic_examples() {
        assert_eq!(geodesic(&path(5), 0, 4), vec![0, 1, 2, 3, 4]);
        assert_eq!(geodesic(&path(5), 3, 3), vec![3]);
        // both 0-1-2 and 0-3-2 are shortest; the min-id parent of 2 is 1
        assert_eq!(geodesic(&cycle(4), 0, 2), vec![0, 1, 2]);
    }

    #[test]
    fn min_id_parent_even_when_discovered_late() {
        // queue order is 0,1,2,5,3 so 4 is first reached from 5, but 3 < 5
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 5), (2, 3), (3, 4), (5, 4)]).unwrap();
        let f = bfs(&g, 0);
        assert_eq!(f.distance(4), 3);
        assert_eq!(f.parent(4), Some(3));
        assert_eq!(f.path_to(4), vec![0, 2, 3, 4]);
    }

    #[test]
    fn point_along_examples() {
        assert_eq!(point_along(&path(5), 0, 4, 2).unwrap(), 2);
        assert_eq!(point_along(&path(5), 1, 4, 0).unwrap(), 1);
        assert_eq!(point_along(&cycle(4), 0, 2, 1).unwrap(), 1);
        assert!(point_along(&path(5), 0, 2, 3).is_err());
    }

    #[test]
    fn point_along_row_matches_parent_walk() {
        let g = cycle(7);
        let f = bfs(&g, 2);
        for v in 0..7 {
            for t in 0..=f.distance(v) {
                assert_eq!(point_along_row(&g, f.dist(), v, t), f.point_along(v, t).unwrap());
            }
        }
    }

    #[test]
    fn evaluate_radius_examples() {
        let p = path(5);
        assert_eq!(evaluate_radius(&p, &[2]), (2, 0));
        assert_eq!(evaluate_radius(&p, &[0, 4]), (2, 2));
        assert_eq!(evaluate_radius(&p, &[0, 1, 2, 3, 4]), (0, 0));
    }
}
