//! Exhaustive oracles for small instances.

use crate::bfs::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Size limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteCaps {
    pub max_n: usize,
    /// Largest center count; dispersion accepts sets of up to `max_p + 1`.
    pub max_p: usize,
}

impl Default for BruteCaps {
    fn default() -> Self {
        BruteCaps { max_n: 40, max_p: 4 }
    }
}

fn all_pairs(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|v| bfs_distances(g, v)).collect()
}

/// Exact vertex p-radius and the lexicographically smallest optimal center set.
pub fn brute_pcenter(g: &Graph, p: usize, caps: BruteCaps) -> Result<(u32, Vec<Vertex>)> {
    let n = g.n();
    if p == 0 {
        return Err(Error::OutOfRange {
            what: "p",
            value: 0,
            min: 1,
            max: n as u64,
        });
    }
    if p >= n {
        return Ok((0, (0..n).collect()));
    }
    if n > caps.max_n || p > caps.max_p {
        return Err(Error::LimitExceeded(format!(
            "brute-force p-center with n = {n}, p = {p} (caps n <= {}, p <= {})",
            caps.max_n, caps.max_p
        )));
    }
    let d = all_pairs(g);
    let mut search = CenterSearch {
        d: &d,
        p,
        best: u32::MAX,
        best_set: Vec::new(),
        chosen: Vec::new(),
    };
    search.run(0, &vec![u32::MAX; n]);
    Ok((search.best, search.best_set))
}

struct CenterSearch<'a> {
    d: &'a [Vec<u32>],
    p: usize,
    best: u32,
    best_set: Vec<Vertex>,
    chosen: Vec<Vertex>,
}

impl CenterSearch<'_> {
    fn run(&mut self, next: usize, cover: &[u32]) {
        let n = self.d.len();
        if self.chosen.len() == self.p {
            let r = cover.iter().copied().max().unwrap();
            if r < self.best {
                self.best = r;
                self.best_set = self.chosen.clone();
            }
            return;
        }
        if n - next < self.p - self.chosen.len() {
            return;
        }
        // every vertex still at distance >= best needs some remaining candidate closer than best
        if self.best != u32::MAX {
            let hopeless = (0..n).any(|v| cover[v] >= self.best && (next..n).all(|c| self.d[c][v] >= self.best));
            if hopeless {
                return;
            }
        }
        for c in next..n {
            let merged: Vec<u32> = cover.iter().zip(&self.d[c]).map(|(&a, &b)| a.min(b)).collect();
            self.chosen.push(c);
            self.run(c + 1, &merged);
            self.chosen.pop();
        }
    }
}

/// Exact q-dispersion value `d_q` and the lexicographically smallest set attaining it.
pub fn brute_dispersion(g: &Graph, q: usize, caps: BruteCaps) -> Result<(u32, Vec<Vertex>)> {
    let n = g.n();
    if q < 2 || q > n {
        return Err(Error::OutOfRange {
            what: "packing size",
            value: q as u64,
            min: 2,
            max: n as u64,
        });
    }
    if n > caps.max_n || q > caps.max_p + 1 {
        return Err(Error::LimitExceeded(format!(
            "brute-force dispersion with n = {n}, q = {q} (caps n <= {}, q <= {})",
            caps.max_n,
            caps.max_p + 1
        )));
    }
    let d = all_pairs(g);
    let mut search = DispersionSearch {
        d: &d,
        q,
        best: None,
        best_set: Vec::new(),
        chosen: Vec::new(),
    };
    search.run(0, u32::MAX);
    Ok((search.best.unwrap(), search.best_set))
}

struct DispersionSearch<'a> {
    d: &'a [Vec<u32>],
    q: usize,
    best: Option<u32>,
    best_set: Vec<Vertex>,
    chosen: Vec<Vertex>,
}

impl DispersionSearch<'_> {
    fn run(&mut self, next: usize, spread: u32) {
        if self.chosen.len() == self.q {
            if self.best.is_none_or(|b| spread > b) {
                self.best = Some(spread);
                self.best_set = self.chosen.clone();
            }
            return;
        }
        let n = self.d.len();
        if n - next < self.q - self.chosen.len() {
            return;
        }
        for c in next..n {
            let s = self.chosen.iter().map(|&x| self.d[c][x]).fold(spread, u32::min);
            if self.best.is_some_and(|b| s <= b) {
                continue;
            }
            self.chosen.push(c);
            self.run(c + 1, s);
            self.chosen.pop();
        }
    }
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

    #[test]
    fn pcenter_examples() {
        let caps = BruteCaps::default();
        assert_eq!(brute_pcenter(&path(5), 1, caps).unwrap(), (2, vec![2]));
        assert_eq!(brute_pcenter(&path(7), 2, caps).unwrap().0, 2);
        assert_eq!(brute_pcenter(&cycle(6), 2, caps).unwrap(), (1, vec![0, 3]));
        assert_eq!(brute_pcenter(&path(3), 3, caps).unwrap(), (0, vec![0, 1, 2]));
    }

    #[test]
    fn dispersion_examples() {
        let caps = BruteCaps::default();
        assert_eq!(brute_dispersion(&path(5), 2, caps).unwrap(), (4, vec![0, 4]));
        assert_eq!(brute_dispersion(&path(5), 3, caps).unwrap(), (2, vec![0, 2, 4]));
        assert_eq!(brute_dispersion(&cycle(6), 3, caps).unwrap().0, 2);
    }

    #[test]
    fn caps_enforced() {
        let small = BruteCaps { max_n: 4, max_p: 1 };
        assert!(matches!(
            brute_pcenter(&path(5), 1, small),
            Err(Error::LimitExceeded(_))
        ));
        assert!(matches!(
            brute_pcenter(&path(4), 2, small),
            Err(Error::LimitExceeded(_))
        ));
        assert!(matches!(
            brute_dispersion(&path(4), 3, small),
            Err(Error::LimitExceeded(_))
        ));
        assert!(brute_dispersion(&path(4), 1, small).is_err());
    }
}
