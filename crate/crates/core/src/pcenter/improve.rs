//! Local improvement of a packing until it is a locally diametrical set.

use super::properties::check_properties;
use super::state::PackingState;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::hyperbolicity::HalfInt;

/// Replaces members that attain `kappa` by vertices farther than `kappa`
/// from every other member, sweeping in member order until a full sweep
/// finds nothing. Among valid replacements the one maximising the distance
/// to the other members wins, smallest id on ties. Returns the number of
/// replacements.
pub fn improve_b(g: &Graph, state: &mut PackingState) -> usize {
    let mut replaced = 0;
    loop {
        let mut improved = false;
        for i in 0..state.len() {
            if !state.attains_kappa(i) {
                continue;
            }
            let kappa = state.kappa();
            let mut best: Option<(u32, Vertex)> = None;
            for w in 0..g.n() {
                let s = state.min_dist_excluding(w, i);
                if s > kappa && best.is_none_or(|b| s > b.0) {
                    best = Some((s, w));
                }
            }
            if let Some((_, w)) = best {
                state.replace(g, i, w);
                improved = true;
                replaced += 1;
            }
        }
        if !improved {
            return replaced;
        }
    }
}

/// Pushes each of `v₁ … v_p` (see [`PackingState::labelling`]) as far from
/// `v₀` as it can go while staying within `kappa` of its old position and
/// farther than `kappa` from every other member. The state must already
/// satisfy the no-improvable-member property that [`improve_b`] establishes.
pub fn improve_c(g: &Graph, state: &mut PackingState) -> Result<usize> {
    let report = check_properties(g, state, HalfInt::ZERO);
    if !report.a || !report.b {
        return Err(Error::Precondition(format!(
            "improve_c needs a state without improvable members (witness {:?})",
            report.b_witness
        )));
    }
    let kappa = state.kappa();
    let labels = state.labelling();
    let i0 = labels[0];
    let mut replaced = 0;
    for &i in &labels[1..] {
        let v = state.members()[i];
        let from_v0 = state.row(i0).to_vec();
        let reach = from_v0[v];
        let mut best: Option<(u32, Vertex)> = None;
        for w in 0..g.n() {
            let d0 = from_v0[w];
            if d0 > reach
                && state.row(i)[w] <= kappa
                && state.min_dist_excluding(w, i) > kappa
                && best.is_none_or(|b| d0 > b.0)
            {
                best = Some((d0, w));
            }
        }
        if let Some((_, w)) = best {
            state.replace(g, i, w);
            replaced += 1;
        }
    }
    Ok(replaced)
}

/// Outcome of [`optimize_packing`].
#[derive(Debug, Clone)]
pub struct Optimized {
    pub state: PackingState,
    pub rounds: u32,
    /// Potential after the opening `improve_b`, then after every round.
    pub phi_history: Vec<u64>,
}

/// `improve_b`, then rounds of `improve_c` + `improve_b` until a round leaves
/// the potential unchanged. More than `round_cap` rounds is an error.
pub fn optimize_packing(g: &Graph, p: usize, initial: &[Vertex], round_cap: u64) -> Result<Optimized> {
    if initial.len() != p + 1 {
        return Err(Error::Precondition(format!(
            "initial packing has {} members, expected p + 1 = {}",
            initial.len(),
            p + 1
        )));
    }
    let mut state = PackingState::new(g, initial)?;
    improve_b(g, &mut state);
    let mut history = vec![state.phi()];
    let mut rounds = 0u32;
    loop {
        if rounds as u64 >= round_cap {
            return Err(Error::RoundCap {
                cap: round_cap,
                history,
            });
        }
        let before = state.phi();
        improve_c(g, &mut state)?;
        improve_b(g, &mut state);
        rounds += 1;
        history.push(state.phi());
        if state.phi() == before {
            break;
        }
    }
    Ok(Optimized {
        state,
        rounds,
        phi_history: history,
    })
}
