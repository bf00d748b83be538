use serde::Serialize;

use super::state::PackingState;
use crate::graph::{Graph, Vertex};
use crate::hyperbolicity::HalfInt;

/// Result of auditing a packing against the three locally-diametrical
/// conditions. Witnesses are vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// Some member pair attains `kappa`; `v0` is taken from the smallest such pair.
    pub a: bool,
    /// No member attaining `kappa` can be swapped for a vertex farther than
    /// `kappa` from all other members.
    pub b: bool,
    /// No `v_i` can move more than `2δ` farther from `v0` while staying within
    /// `kappa` of itself and farther than `kappa` from the other members.
    pub c: bool,
    pub v0: Vertex,
    /// `(member, replacement)` violating (b).
    pub b_witness: Option<(Vertex, Vertex)>,
    /// `(member, replacement)` violating (c).
    pub c_witness: Option<(Vertex, Vertex)>,
}

impl PropertyReport {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c
    }
}

pub fn check_properties(g: &Graph, state: &PackingState, delta: HalfInt) -> PropertyReport {
    let kappa = state.kappa();
    let members = state.members();
    let a = (0..state.len()).any(|i| state.attains_kappa(i));

    let mut b_witness = None;
    'b: for i in 0..state.len() {
        if !state.attains_kappa(i) {
            continue;
        }
        for w in 0..g.n() {
            if state.min_dist_excluding(w, i) > kappa {
                b_witness = Some((members[i], w));
                break 'b;
            }
        }
    }

    let labels = state.labelling();
    let i0 = labels[0];
    let slack = delta.twice();
    let from_v0 = state.row(i0);
    let mut c_witness = None;
    'c: for &i in &labels[1..] {
        let reach = from_v0[members[i]].saturating_add(slack);
        for v in 0..g.n() {
            if from_v0[v] > reach && state.row(i)[v] <= kappa && state.min_dist_excluding(v, i) > kappa {
                c_witness = Some((members[i], v));
                break 'c;
            }
        }
    }

    PropertyReport {
        a,
        b: b_witness.is_none(),
        c: c_witness.is_none(),
        v0: members[i0],
        b_witness,
        c_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn crowded_path_fails_b() {
        let g = path(7);
        let s = PackingState::new(&g, &[0, 1, 6]).unwrap();
        let r = check_properties(&g, &s, HalfInt::ZERO);
        assert!(r.a);
        assert!(!r.b);
        assert_eq!(r.b_witness, Some((0, 3)));
    }

    #[test]
    fn spread_path_passes() {
        let g = path(7);
        let s = PackingState::new(&g, &[6, 0, 3]).unwrap();
        let r = check_properties(&g, &s, HalfInt::ZERO);
        assert!(r.all());
        assert_eq!(r.v0, 0);
    }

    #[test]
    fn slack_hides_short_moves() {
        // legs from 0: 0-1-2, 0-3-4, 0-5-6-7-8; member 7 can step out to 8
        let g = Graph::from_edges(9, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7), (7, 8)]).unwrap();
        let s = PackingState::new(&g, &[2, 4, 7]).unwrap();
        let strict = check_properties(&g, &s, HalfInt::ZERO);
        assert!(strict.a && strict.b);
        assert!(!strict.c);
        assert_eq!(strict.c_witness, Some((7, 8)));
        assert!(check_properties(&g, &s, HalfInt::from_twice(1)).c);
    }
}
