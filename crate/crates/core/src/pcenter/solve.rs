use log::{debug, warn};

use super::brute::{brute_dispersion, brute_pcenter, BruteCaps};
use super::extract::extract_centers;
use super::improve::optimize_packing;
use super::properties::check_properties;
use super::state::PackingState;
use crate::bfs::evaluate_radius;
use crate::diametric::{chepoi_one_center, one_center_from, two_center_from};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hyperbolicity::{lambda_n, HalfInt};
use crate::solution::{Algo, CenterSolution};
use crate::tree::{initial_packing_on, layering_partition, tree_p_center};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Hyperbolicity used for the round cap and the final audit. Without
    /// it the cap falls back to a diameter bound and the audit uses 0.
    pub delta: Option<HalfInt>,
    /// Start vertex for the locally diametrical pair search.
    pub start: Vertex,
    /// Root of the layering partition.
    pub root: Vertex,
    pub brute_caps: BruteCaps,
}

/// Upper bound on optimisation rounds: `10·(p+1)·Λ_n` when δ is known,
/// otherwise `10·(p+1)·(2·ecc + 1)` with `ecc` the eccentricity of a member,
/// which bounds the diameter and hence how far `kappa` can grow.
pub fn round_cap(p: usize, n: usize, delta: Option<HalfInt>, ecc_hint: u32) -> u64 {
    let per_member = match delta {
        Some(d) => lambda_n(d, n) as u64,
        None => 2 * ecc_hint as u64 + 1,
    };
    10 * (p as u64 + 1) * per_member.max(1)
}

/// Approximate vertex p-center with a packing certificate.
pub fn solve(g: &Graph, p: usize, algo: Algo, opts: &SolveOptions) -> Result<CenterSolution> {
    let n = g.n();
    if p == 0 || p > n {
        return Err(Error::OutOfRange {
            what: "p",
            value: p as u64,
            min: 1,
            max: n as u64,
        });
    }
    g.check_vertex(opts.start)?;
    g.check_vertex(opts.root)?;
    let mut sol = match algo {
        Algo::Auto => match p {
            1 => one_center_from(g, opts.start)?,
            2 => two_center_from(g, opts.start)?,
            _ => general(g, p, opts)?,
        },
        Algo::General => general(g, p, opts)?,
        Algo::Tree => tree_baseline(g, p, opts)?,
        Algo::Chepoi1 => {
            if p != 1 {
                return Err(Error::OutOfRange {
                    what: "p for chepoi1",
                    value: p as u64,
                    min: 1,
                    max: 1,
                });
            }
            chepoi_one_center(g, opts.start)?
        }
        Algo::Brute => brute(g, p, opts.brute_caps)?,
    };
    sol.algo = algo;
    sol.p = p;
    Ok(sol)
}

fn all_vertices(g: &Graph, p: usize) -> CenterSolution {
    CenterSolution {
        p,
        algo: Algo::General,
        centers: (0..g.n()).collect(),
        radius: 0,
        witness: 0,
        kappa: 0,
        lower_bound: 0,
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total: 0,
    }
}

fn general(g: &Graph, p: usize, opts: &SolveOptions) -> Result<CenterSolution> {
    if p >= g.n() {
        return Ok(all_vertices(g, p));
    }
    let t = layering_partition(g, opts.root)?;
    let initial = initial_packing_on(&t, p)?;
    let ecc_hint = t.tree().max_depth();
    let cap = round_cap(p, g.n(), opts.delta, ecc_hint);
    let out = optimize_packing(g, p, &initial.members, cap)?;
    debug!("packing settled after {} rounds, phi {:?}", out.rounds, out.phi_history);

    let report = check_properties(g, &out.state, opts.delta.unwrap_or(HalfInt::ZERO));
    if !report.a || !report.b {
        return Err(Error::Precondition(format!(
            "optimised packing fails its own audit: {report:?}"
        )));
    }
    if !report.c {
        match opts.delta {
            Some(d) => warn!(
                "packing violates the far-move condition at delta {d}: {:?}",
                report.c_witness
            ),
            None => debug!("packing admits a far move at delta 0: {:?}", report.c_witness),
        }
    }

    let mut sol = extract_centers(g, &out.state);
    // the layering BFS
    sol.bfs_total += 1;
    sol.rounds = out.rounds;
    sol.phi_history = out.phi_history;
    Ok(sol)
}

fn tree_baseline(g: &Graph, p: usize, opts: &SolveOptions) -> Result<CenterSolution> {
    if p >= g.n() {
        return Ok(all_vertices(g, p));
    }
    let t = layering_partition(g, opts.root)?;
    let (_, clusters) = tree_p_center(t.tree(), p)?;
    let mut centers: Vec<Vertex> = clusters.iter().map(|&c| t.representative(c)).collect();
    centers.sort_unstable();
    centers.dedup();
    let (radius, witness) = evaluate_radius(g, &centers);
    let packing = PackingState::new(g, &initial_packing_on(&t, p)?.members)?;
    let kappa = packing.kappa();
    Ok(CenterSolution {
        p,
        algo: Algo::Tree,
        centers,
        radius,
        witness,
        kappa,
        lower_bound: kappa.div_ceil(2),
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total: 2 + packing.bfs_runs(),
    })
}

fn brute(g: &Graph, p: usize, caps: BruteCaps) -> Result<CenterSolution> {
    let (radius, centers) = brute_pcenter(g, p, caps)?;
    let (_, witness) = evaluate_radius(g, &centers);
    let kappa = if p < g.n() {
        brute_dispersion(g, p + 1, caps)?.0
    } else {
        0
    };
    Ok(CenterSolution {
        p,
        algo: Algo::Brute,
        centers,
        radius,
        witness,
        kappa,
        lower_bound: kappa.div_ceil(2),
        rounds: 0,
        phi_history: Vec::new(),
        bfs_total: g.n() as u64,
    })
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
    fn p_equals_n() {
        let g = cycle(5);
        for algo in [Algo::Auto, Algo::General, Algo::Tree, Algo::Brute] {
            let s = solve(&g, 5, algo, &SolveOptions::default()).unwrap();
            assert_eq!(s.radius, 0, "{algo}");
            assert_eq!(s.algo, algo);
        }
    }

    #[test]
    fn p_out_of_range() {
        let g = path(4);
        assert!(solve(&g, 0, Algo::Auto, &SolveOptions::default()).is_err());
        assert!(solve(&g, 5, Algo::Auto, &SolveOptions::default()).is_err());
        assert!(solve(&g, 2, Algo::Chepoi1, &SolveOptions::default()).is_err());
    }

    #[test]
    fn path_general_and_baselines() {
        let g = path(7);
        let opts = SolveOptions {
            delta: Some(HalfInt::ZERO),
            ..Default::default()
        };
        let s = solve(&g, 2, Algo::General, &opts).unwrap();
        assert_eq!((s.radius, s.kappa, s.lower_bound), (2, 3, 2));
        assert_eq!(s.phi_history.len(), s.rounds as usize + 1);
        assert_eq!(solve(&g, 2, Algo::Tree, &opts).unwrap().radius, 2);
        assert_eq!(solve(&g, 2, Algo::Brute, &opts).unwrap().radius, 2);
        assert_eq!(solve(&g, 1, Algo::Chepoi1, &opts).unwrap().radius, 3);
        assert_eq!(solve(&g, 3, Algo::Auto, &opts).unwrap().radius, 1);
    }

    #[test]
    fn results_recheck() {
        let g = cycle(11);
        for p in 1..=4 {
            let s = solve(&g, p, Algo::Auto, &SolveOptions::default()).unwrap();
            assert!(s.centers.len() <= p);
            assert_eq!(evaluate_radius(&g, &s.centers), (s.radius, s.witness));
            assert!(s.lower_bound <= s.radius);
        }
    }

    #[test]
    fn round_cap_values() {
        assert_eq!(round_cap(3, 1000, Some(HalfInt::ZERO), 99), 160);
        assert_eq!(round_cap(1, 10, None, 4), 180);
    }
}
