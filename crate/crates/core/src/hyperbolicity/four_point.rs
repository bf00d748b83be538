use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{lambda_n, HalfInt, HyperbolicityReport};
use crate::bfs::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_EXACT_CAP: usize = 512;

const SAMPLE_BATCH: usize = 256;

/// Largest minus second-largest of the three opposite-side sums, i.e. 2δ.
#[inline]
fn spread(dxy: u32, dzw: u32, dxz: u32, dyw: u32, dxw: u32, dyz: u32) -> u32 {
    let mut s = [dxy + dzw, dxz + dyw, dxw + dyz];
    s.sort_unstable();
    s[2] - s[1]
}

/// Four-point value of one quadruple, recomputed from scratch.
pub fn four_point_value(g: &Graph, quad: [Vertex; 4]) -> HalfInt {
    let [x, y, z, w] = quad;
    let dx = bfs_distances(g, x);
    let dy = bfs_distances(g, y);
    let dz = bfs_distances(g, z);
    HalfInt::from_twice(spread(dx[y], dz[w], dx[z], dy[w], dx[w], dy[z]))
}

fn padded_quad(n: usize) -> [Vertex; 4] {
    [0, 1.min(n - 1), 2.min(n - 1), 3.min(n - 1)]
}

/// Exact four-point constant over all quadruples. Needs all-pairs distances
/// and an O(n⁴) scan, so it refuses graphs above `max_n` vertices.
pub fn delta_four_point_exact(g: &Graph, max_n: usize) -> Result<HyperbolicityReport> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "exact four-point hyperbolicity",
            n,
            cap: max_n,
        });
    }
    let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| bfs_distances(g, s)).collect();

    let best = (0..n)
        .into_par_iter()
        .map(|x| {
            let dx = &rows[x];
            let mut best = (0u32, padded_quad(n));
            let mut found = false;
            for y in x + 1..n {
                let dy = &rows[y];
                for z in y + 1..n {
                    let dz = &rows[z];
                    let (dxy, dxz, dyz) = (dx[y], dx[z], dy[z]);
                    for w in z + 1..n {
                        let v = spread(dxy, dz[w], dxz, dy[w], dx[w], dyz);
                        if v > best.0 || !found {
                            best = (v, [x, y, z, w]);
                            found = true;
                        }
                    }
                }
            }
            (best.0, best.1, found)
        })
        .filter(|b| b.2)
        .map(|(v, q, _)| (v, q))
        .reduce_with(|a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a });

    let (twice, quad) = best.unwrap_or((0, padded_quad(n)));
    let delta = HalfInt::from_twice(twice);
    Ok(HyperbolicityReport {
        delta_four_point: delta,
        exact: true,
        samples_used: 0,
        witness_quadruple: quad,
        lambda_n: lambda_n(delta, n),
    })
}

/// Lower bound on the four-point constant from `samples` uniformly drawn
/// quadruples. The quadruple stream depends only on `seed`, so a larger
/// sample count extends the same stream.
///
/// Distances come from one BFS per distinct source vertex in each batch of
/// quadruples; only the handful of needed entries is kept, so memory stays
/// linear in `n`.
pub fn delta_four_point_sampled(g: &Graph, samples: u64, seed: u64) -> Result<HyperbolicityReport> {
    if samples == 0 {
        return Err(Error::OutOfRange {
            what: "samples",
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u32, [Vertex; 4])> = None;
    let mut remaining = samples;

    while remaining > 0 {
        let batch = remaining.min(SAMPLE_BATCH as u64) as usize;
        remaining -= batch as u64;
        let quads: Vec<[Vertex; 4]> = (0..batch)
            .map(|_| {
                let mut q = [0; 4];
                for slot in q.iter_mut() {
                    *slot = rng.gen_range(0..n);
                }
                q.sort_unstable();
                q
            })
            .collect();

        // distances needed: from q[0], q[1], q[2] to the later members
        let mut sources: Vec<Vertex> = quads.iter().flat_map(|q| [q[0], q[1], q[2]]).collect();
        sources.sort_unstable();
        sources.dedup();
        let mut wanted: Vec<Vec<Vertex>> = vec![Vec::new(); sources.len()];
        let slot = |v: Vertex| sources.binary_search(&v).unwrap();
        for q in &quads {
            for i in 0..3 {
                wanted[slot(q[i])].extend_from_slice(&q[i + 1..]);
            }
        }
        let answers: Vec<Vec<(Vertex, u32)>> = sources
            .par_iter()
            .zip(wanted.par_iter())
            .map(|(&s, targets)| {
                let row = bfs_distances(g, s);
                let mut out: Vec<(Vertex, u32)> = targets.iter().map(|&t| (t, row[t])).collect();
                out.sort_unstable();
                out.dedup();
                out
            })
            .collect();
        let d = |a: Vertex, b: Vertex| -> u32 {
            let list = &answers[slot(a)];
            list[list.binary_search_by_key(&b, |e| e.0).unwrap()].1
        };

        for q in quads {
            let [x, y, z, w] = q;
            let v = spread(d(x, y), d(z, w), d(x, z), d(y, w), d(x, w), d(y, z));
            best = match best {
                Some((bv, bq)) if bv > v || (bv == v && bq <= q) => Some((bv, bq)),
                _ => Some((v, q)),
            };
        }
    }

    let (twice, quad) = best.expect("at least one sample");
    let delta = HalfInt::from_twice(twice);
    Ok(HyperbolicityReport {
        delta_four_point: delta,
        exact: false,
        samples_used: samples,
        witness_quadruple: quad,
        lambda_n: lambda_n(delta, n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn brute(g: &Graph) -> u32 {
        let n = g.n();
        let rows: Vec<Vec<u32>> = (0..n).map(|s| bfs_distances(g, s)).collect();
        let mut best = 0;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        let mut s = [
                            rows[x][y] + rows[z][w],
                            rows[x][z] + rows[y][w],
                            rows[x][w] + rows[y][z],
                        ];
                        s.sort();
                        best = best.max(s[2] - s[1]);
                    }
                }
            }
        }
        best
    }

    #[test]
    fn c4_is_one() {
        let r = delta_four_point_exact(&cycle(4), DEFAULT_EXACT_CAP).unwrap();
        assert_eq!(r.delta_four_point, HalfInt::from_int(1));
        assert_eq!(r.witness_quadruple, [0, 1, 2, 3]);
        assert!(r.exact);
    }

    #[test]
    fn tree_is_zero() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(delta_four_point_exact(&g, 512).unwrap().delta_four_point, HalfInt::ZERO);
        assert_eq!(
            delta_four_point_sampled(&g, 500, 3).unwrap().delta_four_point,
            HalfInt::ZERO
        );
    }

    #[test]
    fn exact_matches_all_ordered_quadruples() {
        for n in [5, 6, 7, 9] {
            let g = cycle(n);
            let r = delta_four_point_exact(&g, 512).unwrap();
            assert_eq!(r.delta_four_point.twice(), brute(&g), "C{n}");
            assert_eq!(four_point_value(&g, r.witness_quadruple), r.delta_four_point);
        }
    }

    #[test]
    fn tiny_graphs_have_zero_with_valid_witness() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = delta_four_point_exact(&g, 512).unwrap();
        assert_eq!(r.delta_four_point, HalfInt::ZERO);
        assert_eq!(four_point_value(&g, r.witness_quadruple), HalfInt::ZERO);
    }

    #[test]
    fn exact_cap_enforced() {
        assert!(matches!(
            delta_four_point_exact(&cycle(10), 9),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn sampled_c4_covers_all_quadruples() {
        let r = delta_four_point_sampled(&cycle(4), 2000, 11).unwrap();
        assert_eq!(r.delta_four_point, HalfInt::from_int(1));
        assert_eq!(r.samples_used, 2000);
        assert!(!r.exact);
    }

    #[test]
    fn sampled_is_deterministic_and_monotone() {
        let g = cycle(23);
        let a = delta_four_point_sampled(&g, 300, 7).unwrap();
        let b = delta_four_point_sampled(&g, 300, 7).unwrap();
        assert_eq!(a, b);
        let mut prev = HalfInt::ZERO;
        for s in [1, 10, 100, 600] {
            let r = delta_four_point_sampled(&g, s, 7).unwrap();
            assert!(r.delta_four_point >= prev);
            assert_eq!(four_point_value(&g, r.witness_quadruple), r.delta_four_point);
            prev = r.delta_four_point;
        }
        let exact = delta_four_point_exact(&g, 512).unwrap();
        assert!(prev <= exact.delta_four_point);
    }

    #[test]
    fn zero_samples_rejected() {
        assert!(delta_four_point_sampled(&cycle(4), 0, 0).is_err());
    }
}
