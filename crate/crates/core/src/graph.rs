//! Immutable adjacency storage for simple, connected, undirected graphs.
//!
//! Neighbour lists are kept sorted in one contiguous `targets` buffer indexed
//! by `offsets` (compressed sparse row layout), so scanning the neighbours of
//! a vertex in ascending id order is a slice walk.

use crate::error::{Error, Result};

/// Vertex ids are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

/// Bookkeeping from [`Graph::from_edges`]: what was dropped while building.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices, dropping self-loops and collapsing
    /// duplicate edges. Fails if the result is empty or disconnected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let (g, _) = Self::from_edges_with_stats(n, edges)?;
        Ok(g)
    }

    pub fn from_edges_with_stats(n: usize, edges: &[(Vertex, Vertex)]) -> Result<(Self, BuildStats)> {
        let (g, stats) = Self::build_unchecked(n, edges)?;
        let components = g.component_count();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok((g, stats))
    }

    /// Same as [`Graph::from_edges_with_stats`] without the connectivity check.
    /// Callers are expected to restrict to one component before running any
    /// distance algorithm.
    pub(crate) fn build_unchecked(n: usize, edges: &[(Vertex, Vertex)]) -> Result<(Self, BuildStats)> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n >= (1usize << 31) {
            return Err(Error::TooLarge {
                what: "graph",
                n,
                cap: (1usize << 31) - 1,
            });
        }
        let mut stats = BuildStats::default();
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                stats.self_loops += 1;
                continue;
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0u32; offsets[n]];
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            targets[fill[u]] = v as u32;
            fill[u] += 1;
            targets[fill[v]] = u as u32;
            fill[v] += 1;
        }

        // sort and dedup each row, then compact
        let mut compact_offsets = Vec::with_capacity(n + 1);
        compact_offsets.push(0);
        let mut write = 0;
        for u in 0..n {
            let (start, end) = (offsets[u], offsets[u + 1]);
            targets[start..end].sort_unstable();
            let mut last = None;
            for read in start..end {
                let t = targets[read];
                if last == Some(t) {
                    // each duplicate undirected edge is seen once from each side
                    if (t as usize) > u {
                        stats.duplicates += 1;
                    }
                    continue;
                }
                last = Some(t);
                targets[write] = t;
                write += 1;
            }
            compact_offsets.push(write);
        }
        targets.truncate(write);
        targets.shrink_to_fit();
        Ok((
            Graph {
                offsets: compact_offsets,
                targets,
            },
            stats,
        ))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// Sorted neighbours of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    /// Iterates each undirected edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub(crate) fn components(&self) -> (usize, Vec<u32>) {
        let n = self.n();
        let mut comp = vec![u32::MAX; n];
        let mut count = 0u32;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != u32::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if comp[w] == u32::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count as usize, comp)
    }

    pub(crate) fn component_count(&self) -> usize {
        self.components().0
    }

    /// Keeps only the vertices for which `keep` is true, renumbering them in
    /// increasing order of their old ids. Returns the new graph and the old id
    /// of each new vertex.
    pub(crate) fn induced(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let old_ids: Vec<Vertex> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut new_id = vec![u32::MAX; self.n()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i as u32;
        }
        let mut offsets = Vec::with_capacity(old_ids.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &v in &old_ids {
            // relative order is preserved by the monotone renumbering
            targets.extend(
                self.neighbors(v)
                    .iter()
                    .filter(|&&w| keep[w as usize])
                    .map(|&w| new_id[w as usize]),
            );
            offsets.push(targets.len());
        }
        (Graph { offsets, targets }, old_ids)
    }
}
