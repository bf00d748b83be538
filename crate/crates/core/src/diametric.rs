//! Locally diametrical pairs and the dedicated one- and two-center routines.

use serde::Serialize;

use crate::bfs::{bfs, evaluate_radius, DistanceField};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solution::{Algo, CenterSolution};

/// `u` is farthest from `v` and `v` is farthest from `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiametricalPair {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: u32,
    pub bfs_count: u32,
}

/// A pair together with the BFS fields rooted at both ends.
pub(crate) struct PairSearch {
    pub pair: DiametricalPair,
    pub field_u: DistanceField,
    pub field_v: DistanceField,
}

/// Alternating farthest-vertex search: `v₁ ∈ F(start)`, `v₂ ∈ F(v₁)`, ...
/// until the eccentricity stops growing. Each step picks the smallest-id
/// farthest vertex.
pub fn locally_diametrical_pair(g: &Graph, start: Vertex) -> Result<DiametricalPair> {
    Ok(search_pair(g, start)?.pair)
}

pub(crate) fn search_pair(g: &Graph, start: Vertex) -> Result<PairSearch> {
    g.check_vertex(start)?;
    let mut bfs_count = 1;
    let (_, mut cur) = bfs(g, start).first_farthest();
    let mut field_cur = bfs(g, cur);
    bfs_count += 1;
    let (mut ecc, mut next) = field_cur.first_farthest();

    // the pair distance strictly increases, so diam(G) steps always suffice
    for _ in 0..=g.n() {
        let field_next = bfs(g, next);
        bfs_count += 1;
        let (ecc_next, after) = field_next.first_farthest();
        if ecc_next == ecc {
            return Ok(PairSearch {
                pair: DiametricalPair {
                    u: cur,
                    v: next,
                    distance: ecc,
                    bfs_count,
                },
                field_u: field_cur,
                field_v: field_next,
            });
        }
        debug_assert!(ecc_next > ecc);
        cur = next;
        field_cur = field_next;
        ecc = ecc_next;
        next = after;
    }
    Err(Error::LimitExceeded(format!(
        "locally diametrical pair search did not settle within {} iterations",
        g.n()
    )))
}

/// Integer positions closest to `kappa / 2`: one value when even, two when odd.
pub(crate) fn half_positions(kappa: u32) -> Vec<u32> {
    if kappa.is_multiple_of(2) {
        vec![kappa / 2]
    } else {
        vec![kappa / 2, kappa / 2 + 1]
    }
}

fn best_single_center(
    g: &Graph,
    from: &DistanceField,
    to: Vertex,
    kappa: u32,
    bfs_total: &mut u64,
) -> (Vertex, u32, Vertex) {
    let mut best: Option<(Vertex, u32, Vertex)> = None;
    for t in half_positions(kappa) {
        let c = from.point_along(to, t).expect("position within the geodesic");
        let (radius, witness) = evaluate_radius(g, &[c]);
        *bfs_total += 1;
        if best.is_none_or(|b| radius < b.1) {
            best = Some((c, radius, witness));
        }
    }
    best.unwrap()
}

pub fn one_center(g: &Graph) -> Result<CenterSolution> {
    one_center_from(g, 0)
}

/// Midpoint of a locally diametrical pair `(x, y)`; both vertices next to
/// the midpoint are tried when `d(x, y)` is odd.
pub fn one_center_from(g: &Graph, start: Vertex) -> Result<CenterSolution> {
    let s = search_pair(g, start)?;
    let mut bfs_total = s.pair.bfs_count as u64;
    let kappa = s.pair.distance;
    let (c, radius, witness) = best_single_center(g, &s.field_u, s.pair.v, kappa, &mut bfs_total);
    Ok(CenterSolution {
        p: 1,
        algo: Algo::Auto,
        centers: vec![c],
        radius,
        witness,
        kappa,
        lower_bound: kappa.div_ceil(2),
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total,
    })
}

pub fn two_center(g: &Graph) -> Result<CenterSolution> {
    two_center_from(g, 0)
}

/// Packing `{x, y, z}` with `(x, y)` locally diametrical and `z` maximising
/// `min(d(z, x), d(z, y))`; centers sit `κ/2` from `x` towards `y` and `κ/2`
/// from `y` towards `x`, where `κ` is the smallest pairwise distance in the
/// packing. All four rounding combinations are evaluated.
pub fn two_center_from(g: &Graph, start: Vertex) -> Result<CenterSolution> {
    if g.n() < 2 {
        return Err(Error::OutOfRange {
            what: "vertex count for p = 2",
            value: g.n() as u64,
            min: 2,
            max: u64::MAX,
        });
    }
    let s = search_pair(g, start)?;
    let (x, y) = (s.pair.u, s.pair.v);
    let (fx, fy) = (&s.field_u, &s.field_v);
    let mut bfs_total = s.pair.bfs_count as u64;

    let z = (0..g.n())
        .max_by(|&a, &b| {
            let da = fx.distance(a).min(fy.distance(a));
            let db = fx.distance(b).min(fy.distance(b));
            // max_by returns the last maximum; reverse the id order to keep the smallest
            da.cmp(&db).then(b.cmp(&a))
        })
        .unwrap();
    let kappa = s.pair.distance.min(fx.distance(z)).min(fy.distance(z));

    let positions = half_positions(kappa);
    let mut best: Option<(Vec<Vertex>, u32, Vertex)> = None;
    for &a in &positions {
        let c1 = fx.point_along(y, a)?;
        for &b in &positions {
            let c2 = fy.point_along(x, b)?;
            let mut centers = vec![c1, c2];
            centers.sort_unstable();
            centers.dedup();
            let (radius, witness) = evaluate_radius(g, &centers);
            bfs_total += 1;
            if best.as_ref().is_none_or(|b| radius < b.1) {
                best = Some((centers, radius, witness));
            }
        }
    }
    let (centers, radius, witness) = best.unwrap();
    Ok(CenterSolution {
        p: 2,
        algo: Algo::Auto,
        centers,
        radius,
        witness,
        kappa,
        lower_bound: kappa.div_ceil(2),
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total,
    })
}

/// Baseline: BFS from `start`, BFS from the farthest vertex `x` found, and
/// take the midpoint of `x` and its farthest vertex `y`.
pub fn chepoi_one_center(g: &Graph, start: Vertex) -> Result<CenterSolution> {
    g.check_vertex(start)?;
    let (_, x) = bfs(g, start).first_farthest();
    let fx = bfs(g, x);
    let (kappa, y) = fx.first_farthest();
    let mut bfs_total = 2;
    let (c, radius, witness) = best_single_center(g, &fx, y, kappa, &mut bfs_total);
    Ok(CenterSolution {
        p: 1,
        algo: Algo::Chepoi1,
        centers: vec![c],
        radius,
        witness,
        kappa,
        lower_bound: kappa.div_ceil(2),
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bfs::farthest_set;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star_hub_last(leaves: usize) -> Graph {
        let edges: Vec<_> = (0..leaves).map(|i| (leaves, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn assert_locally_diametrical(g: &Graph, p: &DiametricalPair) {
        let (eu, fu) = farthest_set(g, p.u);
        let (ev, fv) = farthest_set(g, p.v);
        assert!(fu.contains(&p.v) && fv.contains(&p.u));
        assert_eq!(eu, p.distance);
        assert_eq!(ev, p.distance);
    }

    #[test]
    fn pair_on_path() {
        let g = path(5);
        let p = locally_diametrical_pair(&g, 2).unwrap();
        assert_eq!((p.u, p.v, p.distance), (0, 4, 4));
        assert_eq!(p.bfs_count, 3);
        assert_locally_diametrical(&g, &p);
    }

    #[test]
    fn pair_on_c6() {
        // F(0) = {3}, F(3) = {0}, F(0) = {3}: settles on (3, 0)
        let g = cycle(6);
        let p = locally_diametrical_pair(&g, 0).unwrap();
        assert_eq!((p.u, p.v, p.distance), (3, 0, 3));
        assert_locally_diametrical(&g, &p);
    }

    #[test]
    fn pair_rejects_bad_start() {
        assert!(locally_diametrical_pair(&path(3), 9).is_err());
    }

    #[test]
    fn one_center_examples() {
        let s = one_center(&path(5)).unwrap();
        assert_eq!((s.centers.clone(), s.radius), (vec![2], 2));
        assert_eq!(s.kappa, 4);
        assert_eq!(s.lower_bound, 2);

        // from leaf 0: F(0) = {1,2,3} -> 1, F(1) -> 0, settles on (1, 0), midpoint is the hub
        let star = star_hub_last(4);
        let s = one_center(&star).unwrap();
        assert_eq!((s.centers.clone(), s.radius), (vec![4], 1));
    }

    #[test]
    fn one_center_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        let s = one_center(&g).unwrap();
        assert_eq!((s.centers.clone(), s.radius, s.kappa), (vec![0], 0, 0));
    }

    #[test]
    fn two_center_examples() {
        let s = two_center(&path(2)).unwrap();
        assert_eq!(s.radius, 0);
        assert_eq!(s.centers, vec![0, 1]);

        // pair (0,6), z = 3, kappa = 3; brute force on P7 also gives 2
        let s = two_center(&path(7)).unwrap();
        assert_eq!(s.radius, 2);
        assert_eq!(s.kappa, 3);
        assert_eq!(s.lower_bound, 2);
        assert_eq!(evaluate_radius(&path(7), &s.centers), (s.radius, s.witness));
    }

    #[test]
    fn two_center_needs_two_vertices() {
        assert!(two_center(&Graph::from_edges(1, &[]).unwrap()).is_err());
    }

    #[test]
    fn chepoi_baseline_on_path() {
        let s = chepoi_one_center(&path(6), 0).unwrap();
        assert_eq!(s.radius, 3);
        assert_eq!(s.algo, Algo::Chepoi1);
    }

    #[test]
    fn half_positions_rounding() {
        assert_eq!(half_positions(4), vec![2]);
        assert_eq!(half_positions(3), vec![1, 2]);
        assert_eq!(half_positions(0), vec![0]);
    }
}
