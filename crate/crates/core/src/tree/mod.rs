//! Tree surrogates for the graph metric: the layering-partition cluster tree,
//! exact dispersion and p-center on trees, and the initial (p+1)-packing.

mod layering;
mod rooted;

pub use layering::{layering_partition, tree_distance, ApproxTree};
pub use rooted::{tree_cover, tree_dispersion, tree_p_center, tree_p_diameter, RootedTree};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// `p + 1` distinct vertices picked through the cluster tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialPacking {
    pub members: Vec<Vertex>,
    /// Dispersion threshold used on the cluster tree (`2λ_T`).
    pub tree_kappa: u32,
}

pub fn initial_packing(g: &Graph, p: usize) -> Result<Vec<Vertex>> {
    let t = layering_partition(g, 0)?;
    Ok(initial_packing_on(&t, p)?.members)
}

/// Solves the (p+1)-dispersion exactly on the cluster tree and returns one
/// representative (smallest id) per selected cluster, in selection order.
///
/// When the tree has fewer than `p + 1` clusters the threshold is 0 and
/// clusters contribute several members each: first one representative per
/// cluster, then the remaining members.
pub fn initial_packing_on(t: &ApproxTree, p: usize) -> Result<InitialPacking> {
    let q = p + 1;
    let n = t.members_total();
    if p == 0 || q > n {
        return Err(Error::OutOfRange {
            what: "p",
            value: p as u64,
            min: 1,
            max: n.saturating_sub(1) as u64,
        });
    }
    let tree = t.tree();
    if tree.len() >= q {
        let k = tree_p_diameter(tree, q)?;
        let members = tree_dispersion(tree, k)
            .into_iter()
            .take(q)
            .map(|c| t.representative(c))
            .collect();
        return Ok(InitialPacking { members, tree_kappa: k });
    }

    let order = tree.deepest_first();
    let mut members: Vec<Vertex> = order.iter().map(|&c| t.representative(c)).collect();
    'fill: for &c in &order {
        for &v in &t.members(c)[1..] {
            if members.len() == q {
                break 'fill;
            }
            members.push(v as Vertex);
        }
    }
    members.truncate(q);
    Ok(InitialPacking { members, tree_kappa: 0 })
}

impl ApproxTree {
    fn members_total(&self) -> usize {
        (0..self.cluster_count()).map(|c| self.members(c).len()).sum()
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
    fn path_of_seven() {
        let mut m = initial_packing(&path(7), 2).unwrap();
        m.sort_unstable();
        assert_eq!(m, vec![0, 3, 6]);
    }

    #[test]
    fn too_many_members() {
        assert!(initial_packing(&path(3), 3).is_err());
        assert!(initial_packing(&path(3), 0).is_err());
    }

    #[test]
    fn few_clusters_fall_back_to_members() {
        // K4: clusters {0} and {1,2,3}
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = layering_partition(&g, 0).unwrap();
        assert_eq!(t.cluster_count(), 2);
        let ip = initial_packing_on(&t, 3).unwrap();
        assert_eq!(ip.tree_kappa, 0);
        let mut m = ip.members.clone();
        m.sort_unstable();
        assert_eq!(m, vec![0, 1, 2, 3]);
    }
}
