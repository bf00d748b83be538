#![allow(dead_code)]

use hypercenter::{Graph, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree with shuffled labels.
pub fn random_tree_edges(rng: &mut TestRng, n: usize) -> Vec<(Vertex, Vertex)> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    (1..n).map(|i| (perm[rng.gen_range(0..i)], perm[i])).collect()
}

pub fn random_tree(rng: &mut TestRng, n: usize) -> Graph {
    Graph::from_edges(n, &random_tree_edges(rng, n)).unwrap()
}

/// A random spanning tree plus `extra` random chords (duplicates dropped).
pub fn random_connected(rng: &mut TestRng, n: usize, extra: usize) -> Graph {
    let mut edges = random_tree_edges(rng, n);
    if n > 1 {
        for _ in 0..extra {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub const INF: u32 = u32::MAX / 4;

/// All-pairs distances by Floyd–Warshall over the edge list.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[Vertex])) {
    fn rec(n: usize, k: usize, next: usize, cur: &mut Vec<Vertex>, f: &mut dyn FnMut(&[Vertex])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for v in next..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), &mut f);
}

/// Largest set pairwise at distance `>= k`, by trying every subset, largest first.
pub fn max_dispersed_subset(d: &[Vec<u32>], k: u32) -> usize {
    let n = d.len();
    for size in (1..=n).rev() {
        let mut found = false;
        for_each_subset(n, size, |s| {
            if !found
                && s.iter()
                    .enumerate()
                    .all(|(i, &a)| s[i + 1..].iter().all(|&b| d[a][b] >= k))
            {
                found = true;
            }
        });
        if found {
            return size;
        }
    }
    0
}

/// Exact vertex p-radius of a tree given its distance table: the smallest
/// `r` whose greedy cover (deepest uncovered vertex, open its `r`-th ancestor
/// towards vertex 0) needs at most `p` centers.
pub fn tree_radius_oracle(d: &[Vec<u32>], p: usize) -> u32 {
    let n = d.len();
    let depth = &d[0];
    let parent: Vec<Option<Vertex>> = (0..n)
        .map(|v| {
            if v == 0 {
                None
            } else {
                (0..n).find(|&u| d[u][v] == 1 && depth[u] + 1 == depth[v])
            }
        })
        .collect();
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(depth[v]));
    let needed = |r: u32| {
        let mut covered = vec![false; n];
        let mut count = 0;
        for &v in &order {
            if covered[v] {
                continue;
            }
            let mut c = v;
            for _ in 0..r {
                if let Some(q) = parent[c] {
                    c = q;
                }
            }
            count += 1;
            for w in 0..n {
                if d[c][w] <= r {
                    covered[w] = true;
                }
            }
        }
        count
    };
    let (mut lo, mut hi) = (0u32, n as u32);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if needed(mid) <= p {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Exact vertex p-radius by trying every p-subset.
pub fn pcenter_by_subsets(d: &[Vec<u32>], p: usize) -> u32 {
    let n = d.len();
    let mut best = u32::MAX;
    for_each_subset(n, p.min(n), |s| {
        let r = (0..n).map(|v| s.iter().map(|&c| d[c][v]).min().unwrap()).max().unwrap();
        best = best.min(r);
    });
    best
}

/// Exact `d_q` by trying every q-subset.
pub fn dispersion_by_subsets(d: &[Vec<u32>], q: usize) -> u32 {
    let mut best = 0;
    for_each_subset(d.len(), q, |s| {
        let mut m = u32::MAX;
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                m = m.min(d[a][b]);
            }
        }
        best = best.max(m);
    });
    best
}
