//! Rooted trees with unit edges: maximum dispersion, the q-diameter by
//! binary search over dispersion thresholds, and exact vertex p-centers.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: Vertex,
    parent: Vec<u32>,
    depth: Vec<u32>,
    offsets: Vec<usize>,
    adjacency: Vec<u32>,
}

impl RootedTree {
    /// `parents[v] = None` marks the root; there must be exactly one and the
    /// parent links must be acyclic.
    pub fn from_parents(parents: &[Option<Vertex>]) -> Result<Self> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let roots: Vec<Vertex> = (0..n).filter(|&v| parents[v].is_none()).collect();
        if roots.len() != 1 {
            return Err(Error::Precondition(format!(
                "tree needs exactly one root, found {}",
                roots.len()
            )));
        }
        let parent: Vec<u32> = parents
            .iter()
            .map(|p| match p {
                Some(p) if *p < n => Ok(*p as u32),
                Some(p) => Err(Error::VertexOutOfRange { vertex: *p, n }),
                None => Ok(NONE),
            })
            .collect::<Result<_>>()?;

        let mut degree = vec![0usize; n];
        for v in 0..n {
            if parent[v] != NONE {
                degree[v] += 1;
                degree[parent[v] as usize] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![0u32; offsets[n]];
        for v in 0..n {
            if parent[v] != NONE {
                let p = parent[v] as usize;
                adjacency[fill[v]] = p as u32;
                fill[v] += 1;
                adjacency[fill[p]] = v as u32;
                fill[p] += 1;
            }
        }
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_unstable();
        }

        // depths by BFS from the root; anything unreached sits on a cycle
        let root = roots[0];
        let mut depth = vec![NONE; n];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[offsets[u]..offsets[u + 1]] {
                let w = w as usize;
                if parent[w] == u as u32 && depth[w] == NONE {
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if depth.contains(&NONE) {
            return Err(Error::Precondition("parent links contain a cycle".into()));
        }
        Ok(RootedTree {
            root,
            parent,
            depth,
            offsets,
            adjacency,
        })
    }

    /// Roots a graph that is itself a tree.
    pub fn from_graph(g: &Graph, root: Vertex) -> Result<Self> {
        g.check_vertex(root)?;
        if g.m() + 1 != g.n() {
            return Err(Error::Precondition(format!(
                "graph with n = {} and m = {} is not a tree",
                g.n(),
                g.m()
            )));
        }
        let field = crate::bfs::bfs(g, root);
        let parents: Vec<Option<Vertex>> = (0..g.n()).map(|v| field.parent(v)).collect();
        Self::from_parents(&parents)
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v] {
            NONE => None,
            p => Some(p as Vertex),
        }
    }

    pub fn depth(&self, v: Vertex) -> u32 {
        self.depth[v]
    }

    pub fn max_depth(&self) -> u32 {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: Vertex) -> &[u32] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Path length between two nodes, by climbing to the common ancestor.
    pub fn distance(&self, u: Vertex, v: Vertex) -> u32 {
        let (mut a, mut b) = (u, v);
        let mut steps = 0;
        while self.depth[a] > self.depth[b] {
            a = self.parent[a] as usize;
            steps += 1;
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b] as usize;
            steps += 1;
        }
        while a != b {
            a = self.parent[a] as usize;
            b = self.parent[b] as usize;
            steps += 2;
        }
        steps
    }

    /// Nodes by decreasing depth, ties by ascending id.
    pub fn deepest_first(&self) -> Vec<Vertex> {
        let mut order: Vec<Vertex> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.depth[b].cmp(&self.depth[a]).then(a.cmp(&b)));
        order
    }

    fn ancestor(&self, mut v: Vertex, steps: u32) -> Vertex {
        for _ in 0..steps {
            match self.parent(v) {
                Some(p) => v = p,
                None => break,
            }
        }
        v
    }

    /// Truncated BFS from `source`, lowering `near[w]` to `d(source, w)` where
    /// that is smaller and at most `radius`. Entries that do not improve are
    /// not expanded: whatever lies behind them is already at least as close
    /// to an earlier source.
    fn relax_ball(&self, source: Vertex, radius: u32, near: &mut [u32], queue: &mut VecDeque<(Vertex, u32)>) {
        near[source] = 0;
        queue.clear();
        queue.push_back((source, 0));
        while let Some((u, d)) = queue.pop_front() {
            if d == radius {
                continue;
            }
            for &w in self.neighbors(u) {
                let w = w as usize;
                if d + 1 < near[w] {
                    near[w] = d + 1;
                    queue.push_back((w, d + 1));
                }
            }
        }
    }
}

/// A maximum-size set of nodes pairwise at distance `>= k`, in selection order.
///
/// Greedy from the deepest nodes up: a node is taken when no earlier pick is
/// within `k − 1`. Taking the deepest eligible node never hurts: any pick it
/// displaces from an optimal set is no farther from the remaining members.
pub fn tree_dispersion(t: &RootedTree, k: u32) -> Vec<Vertex> {
    let order = t.deepest_first();
    if k <= 1 {
        return order;
    }
    let mut near = vec![NONE; t.len()];
    let mut queue = VecDeque::new();
    let mut chosen = Vec::new();
    for v in order {
        if near[v] == NONE {
            chosen.push(v);
            t.relax_ball(v, k - 1, &mut near, &mut queue);
        }
    }
    chosen
}

/// The q-diameter: the largest `k` such that `q` nodes can be pairwise at
/// distance `>= k`.
pub fn tree_p_diameter(t: &RootedTree, q: usize) -> Result<u32> {
    if q < 2 || q > t.len() {
        return Err(Error::OutOfRange {
            what: "packing size",
            value: q as u64,
            min: 2,
            max: t.len() as u64,
        });
    }
    // k = 0 always works; no two nodes are more than 2·depth apart
    let (mut lo, mut hi) = (0u32, 2 * t.max_depth() + 1);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if tree_dispersion(t, mid).len() >= q {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Fewest centers covering every node within `radius`: repeatedly take the
/// deepest uncovered node and open its ancestor `radius` levels up (or the root).
pub fn tree_cover(t: &RootedTree, radius: u32) -> Vec<Vertex> {
    let mut near = vec![NONE; t.len()];
    let mut queue = VecDeque::new();
    let mut centers = Vec::new();
    for v in t.deepest_first() {
        if near[v] == NONE {
            let c = t.ancestor(v, radius);
            centers.push(c);
            t.relax_ball(c, radius, &mut near, &mut queue);
        }
    }
    centers
}

/// Exact vertex p-center of a tree. The radius comes from duality with the
/// (p+1)-diameter, `⌈d_{p+1} / 2⌉`; the centers from [`tree_cover`].
pub fn tree_p_center(t: &RootedTree, p: usize) -> Result<(u32, Vec<Vertex>)> {
    if p == 0 {
        return Err(Error::OutOfRange {
            what: "p",
            value: 0,
            min: 1,
            max: t.len() as u64,
        });
    }
    if p >= t.len() {
        return Ok((0, (0..t.len()).collect()));
    }
    let radius = tree_p_diameter(t, p + 1)?.div_ceil(2);
    let mut centers = tree_cover(t, radius);
    debug_assert!(centers.len() <= p, "duality radius must be coverable by p centers");
    centers.sort_unstable();
    centers.dedup();
    Ok((radius, centers))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_tree(n: usize) -> RootedTree {
        let parents: Vec<Option<usize>> = (0..n).map(|i| i.checked_sub(1)).collect();
        RootedTree::from_parents(&parents).unwrap()
    }

    fn star_tree(leaves: usize) -> RootedTree {
        let mut parents = vec![Some(leaves); leaves];
        parents.push(None);
        RootedTree::from_parents(&parents).unwrap()
    }

    fn sorted(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable();
        v
    }

    #[test]
    fn dispersion_examples() {
        assert_eq!(sorted(tree_dispersion(&path_tree(5), 2)), vec![0, 2, 4]);
        assert_eq!(sorted(tree_dispersion(&star_tree(4), 2)), vec![0, 1, 2, 3]);
        assert_eq!(tree_dispersion(&path_tree(5), 0).len(), 5);
        assert_eq!(tree_dispersion(&path_tree(5), 1).len(), 5);
    }

    #[test]
    fn dispersion_from_a_middle_root() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let t = RootedTree::from_graph(&g, 2).unwrap();
        assert_eq!(sorted(tree_dispersion(&t, 2)), vec![0, 2, 4]);
        assert_eq!(sorted(tree_dispersion(&t, 4)), vec![0, 4]);
    }

    #[test]
    fn p_diameter_examples() {
        let t = path_tree(5);
        assert_eq!(tree_p_diameter(&t, 3).unwrap(), 2);
        assert_eq!(tree_p_diameter(&t, 2).unwrap(), 4);
        assert_eq!(tree_p_diameter(&t, 5).unwrap(), 1);
        assert!(tree_p_diameter(&t, 1).is_err());
        assert!(tree_p_diameter(&t, 6).is_err());
    }

    #[test]
    fn p_center_on_path() {
        let t = path_tree(7);
        assert_eq!(tree_p_center(&t, 1).unwrap(), (3, vec![3]));
        let (r, c) = tree_p_center(&t, 2).unwrap();
        assert_eq!((r, c.len()), (2, 2));
        assert_eq!(tree_p_center(&t, 7).unwrap().0, 0);
    }

    #[test]
    fn distance_and_shape() {
        let t = star_tree(3);
        assert_eq!(t.root(), 3);
        assert_eq!(t.distance(0, 1), 2);
        assert_eq!(t.distance(0, 3), 1);
        assert_eq!(t.distance(2, 2), 0);
        assert_eq!(t.max_depth(), 1);
    }

    #[test]
    fn rejects_bad_parents() {
        assert!(RootedTree::from_parents(&[None, None]).is_err());
        assert!(RootedTree::from_parents(&[Some(1), Some(0), None]).is_err());
        assert!(RootedTree::from_parents(&[]).is_err());
        let cyc = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(RootedTree::from_graph(&cyc, 0).is_err());
    }
}
