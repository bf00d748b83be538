use crate::bfs::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy)]
struct Nearest {
    d1: u32,
    i1: u32,
    d2: u32,
}

/// A packing of distinct vertices with one cached BFS row per member.
///
/// `kappa` is the smallest pairwise member distance, `eta` the number of
/// members attaining it, and `phi = |P|·(kappa + 1) − eta` the potential that
/// strictly increases with every improving replacement.
#[derive(Debug, Clone)]
pub struct PackingState {
    members: Vec<Vertex>,
    rows: Vec<Vec<u32>>,
    kappa: u32,
    eta: usize,
    phi: u64,
    // per vertex: nearest member distance and index, second-nearest distance
    nearest: Vec<Nearest>,
    bfs_runs: u64,
}

impl PackingState {
    pub fn new(g: &Graph, members: &[Vertex]) -> Result<Self> {
        if members.len() < 2 {
            return Err(Error::Precondition(format!(
                "a packing needs at least 2 members, got {}",
                members.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in members {
            g.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::DuplicateMember(v));
            }
        }
        let rows: Vec<Vec<u32>> = members.iter().map(|&v| bfs_distances(g, v)).collect();
        let mut state = PackingState {
            members: members.to_vec(),
            rows,
            kappa: 0,
            eta: 0,
            phi: 0,
            nearest: Vec::new(),
            bfs_runs: members.len() as u64,
        };
        state.refresh();
        Ok(state)
    }

    fn refresh(&mut self) {
        let k = self.members.len();
        let mut kappa = u32::MAX;
        for i in 0..k {
            for j in i + 1..k {
                kappa = kappa.min(self.rows[i][self.members[j]]);
            }
        }
        self.kappa = kappa;
        self.eta = (0..k).filter(|&i| self.attains_kappa(i)).count();
        self.phi = k as u64 * (kappa as u64 + 1) - self.eta as u64;

        let n = self.rows[0].len();
        self.nearest.clear();
        self.nearest.extend((0..n).map(|v| {
            let mut best = Nearest {
                d1: u32::MAX,
                i1: u32::MAX,
                d2: u32::MAX,
            };
            for (i, row) in self.rows.iter().enumerate() {
                let d = row[v];
                if d < best.d1 {
                    best.d2 = best.d1;
                    best.d1 = d;
                    best.i1 = i as u32;
                } else if d < best.d2 {
                    best.d2 = d;
                }
            }
            best
        }));
    }

    /// Swaps member `index` for `w`, running one BFS.
    pub(crate) fn replace(&mut self, g: &Graph, index: usize, w: Vertex) {
        debug_assert!(!self.members.contains(&w));
        self.members[index] = w;
        self.rows[index] = bfs_distances(g, w);
        self.bfs_runs += 1;
        self.refresh();
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn row(&self, index: usize) -> &[u32] {
        &self.rows[index]
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn eta(&self) -> usize {
        self.eta
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn bfs_runs(&self) -> u64 {
        self.bfs_runs
    }

    /// Distance between members `i` and `j`.
    pub fn member_distance(&self, i: usize, j: usize) -> u32 {
        self.rows[i][self.members[j]]
    }

    pub fn attains_kappa(&self, i: usize) -> bool {
        (0..self.members.len()).any(|j| j != i && self.member_distance(i, j) == self.kappa)
    }

    /// `min` over members other than `index` of their distance to `w`.
    #[inline]
    pub fn min_dist_excluding(&self, w: Vertex, index: usize) -> u32 {
        let e = self.nearest[w];
        if e.i1 as usize == index {
            e.d2
        } else {
            e.d1
        }
    }

    /// Member indices `[v₀, v₁, …, v_p]`: `v₀` is the smaller endpoint of the
    /// lexicographically smallest member pair at distance `kappa`; the rest
    /// follow by distance from `v₀`, then by id.
    pub fn labelling(&self) -> Vec<usize> {
        let k = self.members.len();
        let mut pair: Option<(Vertex, Vertex)> = None;
        for i in 0..k {
            for j in 0..k {
                if i != j && self.member_distance(i, j) == self.kappa {
                    let (a, b) = (self.members[i], self.members[j]);
                    let cand = (a.min(b), a.max(b));
                    if pair.is_none_or(|p| cand < p) {
                        pair = Some(cand);
                    }
                }
            }
        }
        let v0 = pair.expect("kappa is attained").0;
        let i0 = self.members.iter().position(|&m| m == v0).unwrap();
        let mut rest: Vec<usize> = (0..k).filter(|&i| i != i0).collect();
        rest.sort_by_key(|&i| (self.rows[i0][self.members[i]], self.members[i]));
        let mut labels = Vec::with_capacity(k);
        labels.push(i0);
        labels.extend(rest);
        labels
    }
}

/// Builds a [`PackingState`] for `members` (one BFS each).
pub fn recompute_state(g: &Graph, members: &[Vertex]) -> Result<PackingState> {
    PackingState::new(g, members)
}
