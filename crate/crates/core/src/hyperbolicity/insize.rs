//! Exact thin-triangle hyperbolicity for tiny graphs.
//!
//! For every corner `x` of every geodesic triangle `Δ(x, y, z)` the two sides
//! leaving `x` are walked in lock-step up to the internal distance
//! `α_x = (d(x,y) + d(x,z) − d(y,z)) / 2`, and the distance between the two
//! moving points is maximised. Points may sit inside edges. Along one edge the
//! distance is a minimum of linear pieces with slopes in {−2, 0, 2}, so every
//! breakpoint falls on a quarter of an edge; positions and distances are
//! therefore tracked in quarter units, which keeps everything in integers.
//!
//! A corner only involves the two geodesics that meet there, so the maximum
//! over all triangles is the maximum over corners of the maximum over pairs
//! of geodesics leaving that corner.

use super::HalfInt;
use crate::bfs::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_INSIZE_CAP: usize = 16;
/// Upper limit on the number of distinct geodesics enumerated per pair.
pub const GEODESIC_CAP: usize = 1_000_000;

/// Exact thin-triangle δ. Degenerate triangles (two equal corners) are
/// included, so distinct geodesics between the same pair also count.
pub fn delta_insize_exact(g: &Graph, max_n: usize) -> Result<HalfInt> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "exact insize hyperbolicity",
            n,
            cap: max_n,
        });
    }
    let dist: Vec<Vec<u32>> = (0..n).map(|s| bfs_distances(g, s)).collect();

    // geodesics[x][y]: every shortest path from x to y
    let mut geodesics: Vec<Vec<Vec<Vec<Vertex>>>> = vec![vec![Vec::new(); n]; n];
    for x in 0..n {
        for y in x..n {
            let paths = all_geodesics(g, &dist, x, y)?;
            if x != y {
                geodesics[y][x] = paths.iter().map(|p| p.iter().rev().copied().collect()).collect();
            }
            geodesics[x][y] = paths;
        }
    }

    let mut best_quarters = 0u32;
    for x in 0..n {
        for y in 0..n {
            if y == x {
                continue;
            }
            for z in y..n {
                if z == x {
                    continue;
                }
                let alpha_q = 2 * (dist[x][y] + dist[x][z] - dist[y][z]);
                if alpha_q == 0 {
                    continue;
                }
                for p in &geodesics[x][y] {
                    for q in &geodesics[x][z] {
                        for theta in 0..=alpha_q {
                            let d = point_distance_q(&dist, p, q, theta);
                            best_quarters = best_quarters.max(d);
                        }
                    }
                }
            }
        }
    }
    debug_assert!(best_quarters.is_multiple_of(2), "insize must be a multiple of 1/2");
    Ok(HalfInt::from_twice(best_quarters.div_ceil(2)))
}

fn all_geodesics(g: &Graph, dist: &[Vec<u32>], u: Vertex, v: Vertex) -> Result<Vec<Vec<Vertex>>> {
    let target = dist[u][v];
    let mut out = Vec::new();
    let mut path = vec![u];
    extend(g, dist, v, target, &mut path, &mut out)?;
    if out.len() > GEODESIC_CAP {
        return Err(Error::GeodesicOverflow {
            u,
            v,
            cap: GEODESIC_CAP,
        });
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    dist: &[Vec<u32>],
    v: Vertex,
    target: u32,
    path: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) -> Result<()> {
    let cur = *path.last().unwrap();
    if cur == v {
        if out.len() == GEODESIC_CAP {
            return Err(Error::GeodesicOverflow {
                u: path[0],
                v,
                cap: GEODESIC_CAP,
            });
        }
        out.push(path.clone());
        return Ok(());
    }
    let step = path.len() as u32; // distance from u after taking the next edge
    for &w in g.neighbors(cur) {
        let w = w as usize;
        if dist[w][v] + step == target {
            path.push(w);
            extend(g, dist, v, target, path, out)?;
            path.pop();
        }
    }
    Ok(())
}

/// A point on a path at `theta` quarters from its start: the edge
/// `(path[i], path[i+1])` and an offset in quarters (0 means the vertex).
fn locate(path: &[Vertex], theta: u32) -> (Vertex, Vertex, u32) {
    let i = (theta / 4) as usize;
    let r = theta % 4;
    if r == 0 {
        (path[i], path[i], 0)
    } else {
        (path[i], path[i + 1], r)
    }
}

/// Distance in quarter units between the points at `theta` on two paths.
fn point_distance_q(dist: &[Vec<u32>], p: &[Vertex], q: &[Vertex], theta: u32) -> u32 {
    let (a0, a1, r) = locate(p, theta);
    let (b0, b1, s) = locate(q, theta);
    let d = |x: Vertex, y: Vertex| 4 * dist[x][y];
    let mut best = u32::MAX;
    // leave the first point through either end of its edge, enter the second likewise
    for (ea, ca) in [(a0, r), (a1, 4 - r)] {
        if ca == 4 && r == 0 {
            continue;
        }
        for (eb, cb) in [(b0, s), (b1, 4 - s)] {
            if cb == 4 && s == 0 {
                continue;
            }
            best = best.min(ca + d(ea, eb) + cb);
        }
    }
    // both inside the same edge
    if r != 0 && s != 0 {
        if a0 == b0 && a1 == b1 {
            best = best.min(r.abs_diff(s));
        } else if a0 == b1 && a1 == b0 {
            best = best.min(r.abs_diff(4 - s));
        }
    }
    best
}
