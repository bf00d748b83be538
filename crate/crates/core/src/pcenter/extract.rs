use super::state::PackingState;
use crate::bfs::{evaluate_radius, point_along_row};
use crate::diametric::half_positions;
use crate::graph::Graph;
use crate::solution::{Algo, CenterSolution};

/// One center per `v_i`, `i ≥ 1`: the vertex `κ/2` from `v_i` on the
/// canonical geodesic towards `v₀`. For odd `κ` both roundings are tried,
/// each applied to all members at once, and the smaller radius wins (floor
/// on ties). `rounds` and `phi_history` are left for the caller.
pub fn extract_centers(g: &Graph, state: &PackingState) -> CenterSolution {
    let labels = state.labelling();
    let v0 = state.members()[labels[0]];
    let kappa = state.kappa();
    let mut bfs_total = state.bfs_runs();
    let mut best: Option<(Vec<usize>, u32, usize)> = None;
    for t in half_positions(kappa) {
        let mut centers: Vec<usize> = labels[1..]
            .iter()
            .map(|&i| point_along_row(g, state.row(i), v0, t))
            .collect();
        centers.sort_unstable();
        centers.dedup();
        let (radius, witness) = evaluate_radius(g, &centers);
        bfs_total += 1;
        if best.as_ref().is_none_or(|b| radius < b.1) {
            best = Some((centers, radius, witness));
        }
    }
    let (centers, radius, witness) = best.unwrap();
    CenterSolution {
        p: state.len() - 1,
        algo: Algo::General,
        centers,
        radius,
        witness,
        kappa,
        lower_bound: kappa.div_ceil(2),
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total,
    }
}
