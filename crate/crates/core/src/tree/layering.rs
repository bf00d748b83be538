//! Layering-partition tree.
//!
//! BFS layers from a root are split into clusters: two vertices of layer `i`
//! share a cluster when a path joins them without dipping below layer `i`.
//! Clusters of consecutive layers are linked when an edge joins them, which
//! yields a tree whose distances approximate graph distances additively.
//! Built bottom-up with a union-find over edges whose endpoints both lie at
//! depth `>= i`.

use crate::bfs::bfs_distances;
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::tree::rooted::RootedTree;

#[derive(Debug, Clone)]
pub struct ApproxTree {
    tree: RootedTree,
    vertex_cluster: Vec<u32>,
    member_offsets: Vec<usize>,
    members: Vec<u32>,
    root_vertex: Vertex,
}

impl ApproxTree {
    pub fn cluster_count(&self) -> usize {
        self.tree.len()
    }

    /// The cluster tree itself; node ids are cluster ids.
    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn cluster_parent(&self, c: usize) -> Option<usize> {
        self.tree.parent(c)
    }

    /// Equal to the BFS layer of every member.
    pub fn cluster_depth(&self, c: usize) -> u32 {
        self.tree.depth(c)
    }

    pub fn vertex_cluster(&self, v: Vertex) -> usize {
        self.vertex_cluster[v] as usize
    }

    /// Members of a cluster, ascending.
    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[self.member_offsets[c]..self.member_offsets[c + 1]]
    }

    /// Smallest member id.
    pub fn representative(&self, c: usize) -> Vertex {
        self.members(c)[0] as Vertex
    }

    pub fn root_vertex(&self) -> Vertex {
        self.root_vertex
    }
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let next = self.parent[self.parent[x] as usize];
            self.parent[x] = next;
            x = next as usize;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a as u32;
        self.size[a] += self.size[b];
    }
}

pub fn layering_partition(g: &Graph, root: Vertex) -> Result<ApproxTree> {
    g.check_vertex(root)?;
    let n = g.n();
    let dist = bfs_distances(g, root);
    let depth_max = dist.iter().copied().max().unwrap_or(0) as usize;
    let mut layers: Vec<Vec<Vertex>> = vec![Vec::new(); depth_max + 1];
    for v in 0..n {
        layers[dist[v] as usize].push(v);
    }

    let mut uf = UnionFind::new(n);
    // per layer, clusters in order of their smallest member: (first member, provisional parent)
    let mut layer_clusters: Vec<Vec<(Vertex, u32)>> = vec![Vec::new(); depth_max + 1];
    let mut local_cluster = vec![u32::MAX; n]; // vertex -> index within its layer
    let mut comp_stamp = vec![usize::MAX; n];
    let mut comp_cluster = vec![0u32; n];

    for i in (0..=depth_max).rev() {
        for &v in &layers[i] {
            for &w in g.neighbors(v) {
                if dist[w as usize] as usize >= i {
                    uf.union(v, w as usize);
                }
            }
        }
        for &v in &layers[i] {
            let r = uf.find(v);
            if comp_stamp[r] != i {
                comp_stamp[r] = i;
                comp_cluster[r] = layer_clusters[i].len() as u32;
                layer_clusters[i].push((v, u32::MAX));
            }
            local_cluster[v] = comp_cluster[r];
        }
        if i < depth_max {
            for entry in layer_clusters[i + 1].iter_mut() {
                let r = uf.find(entry.0);
                debug_assert_eq!(comp_stamp[r], i, "every deeper cluster touches the layer above");
                entry.1 = comp_cluster[r];
            }
        }
    }

    // global ids: by layer, then by smallest member
    let mut layer_base = Vec::with_capacity(depth_max + 2);
    layer_base.push(0usize);
    for l in &layer_clusters {
        layer_base.push(layer_base.last().unwrap() + l.len());
    }
    let count = *layer_base.last().unwrap();
    let mut parents: Vec<Option<usize>> = Vec::with_capacity(count);
    for (i, l) in layer_clusters.iter().enumerate() {
        for &(_, p) in l {
            parents.push(if i == 0 {
                None
            } else {
                Some(layer_base[i - 1] + p as usize)
            });
        }
    }
    let vertex_cluster: Vec<u32> = (0..n)
        .map(|v| (layer_base[dist[v] as usize] + local_cluster[v] as usize) as u32)
        .collect();

    let mut member_offsets = vec![0usize; count + 1];
    for &c in &vertex_cluster {
        member_offsets[c as usize + 1] += 1;
    }
    for c in 0..count {
        member_offsets[c + 1] += member_offsets[c];
    }
    let mut fill = member_offsets[..count].to_vec();
    let mut members = vec![0u32; n];
    for v in 0..n {
        let c = vertex_cluster[v] as usize;
        members[fill[c]] = v as u32;
        fill[c] += 1;
    }

    Ok(ApproxTree {
        tree: RootedTree::from_parents(&parents)?,
        vertex_cluster,
        member_offsets,
        members,
        root_vertex: root,
    })
}

/// Distance between the clusters of `u` and `v` in the cluster tree.
pub fn tree_distance(t: &ApproxTree, u: Vertex, v: Vertex) -> u32 {
    t.tree.distance(t.vertex_cluster(u), t.vertex_cluster(v))
}
