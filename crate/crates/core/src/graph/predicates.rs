use super::{Graph, VertexSet};

/// Degree data used by the lower-bound theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Degree-one vertices.
    pub leaves: VertexSet,
    /// Neighbors of leaves.
    pub supports: VertexSet,
    /// Minimum degree over vertices that are neither leaves nor supports;
    /// 2 when every vertex is a leaf or a support.
    pub delta_star: usize,
}

impl Graph {
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.bits() == 0)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices().bits();
        let mut out = Vec::new();
        while unseen != 0 {
            let start = unseen.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            unseen &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// One component; vacuously true for `n <= 1`.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        let mut uncolored = self.vertices().bits();
        while uncolored != 0 {
            let start = uncolored.trailing_zeros() as usize;
            let mut side = [1u64 << start, 0];
            let mut frontier = side[0];
            let mut parity = 0;
            while frontier != 0 {
                let mut next = 0;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v];
                }
                if next & side[parity] != 0 {
                    return false;
                }
                parity ^= 1;
                frontier = next & !side[parity];
                side[parity] |= next;
            }
            if side[0] & side[1] != 0 {
                return false;
            }
            uncolored &= !(side[0] | side[1]);
        }
        true
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| {
            VertexSet(self.adj[u] & !super::low_mask(u + 1))
                .iter()
                .all(|v| self.adj[u] & self.adj[v] == 0)
        })
    }

    /// No induced `K_{1,3}`.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|v| {
            let nb = self.adj[v];
            VertexSet(nb).iter().all(|a| {
                let rest = nb & !self.adj[a] & !super::low_mask(a + 1);
                VertexSet(rest)
                    .iter()
                    .all(|b| rest & !self.adj[b] & !super::low_mask(b + 1) == 0)
            })
        })
    }

    /// Connected and acyclic, with at least one vertex.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() + 1 == self.n && self.is_connected()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    /// Connected 2-regular graph of odd order.
    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3 && self.n % 2 == 1 && self.is_regular(2) && self.is_connected()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut leaves = VertexSet::EMPTY;
        let mut supports = 0u64;
        for v in 0..self.n {
            if self.degree(v) == 1 {
                leaves.insert(v);
                supports |= self.adj[v];
            }
        }
        let supports = VertexSet(supports);
        let inner = self.vertices().bits() & !leaves.bits() & !supports.bits();
        let delta_star = VertexSet(inner).iter().map(|v| self.degree(v)).min().unwrap_or(2);
        DegreeProfile {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            leaves,
            supports,
            delta_star,
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::named::*;
    use crate::graph::Graph;

    #[test]
    fn claw_and_cycles() {
        assert!(!star(3).is_claw_free());
        assert!(cycle(5).is_claw_free());
        assert!(!cycle(5).is_bipartite());
        assert!(cycle(6).is_bipartite());
        assert!(grid(3, 2).is_triangle_free());
        assert!(!complete(3).is_triangle_free());
        assert!(cycle(5).is_odd_cycle());
        assert!(!cycle(6).is_odd_cycle());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!matching(2).is_connected());
        assert_eq!(matching(3).components().len(), 3);
        assert!(path(5).is_tree());
        assert!(!cycle(5).is_tree());
    }

    #[test]
    fn bipartite_disconnected() {
        let g = cycle(4).disjoint_union(&cycle(3)).unwrap();
        assert!(!g.is_bipartite());
        let h = cycle(4).disjoint_union(&path(3)).unwrap();
        assert!(h.is_bipartite());
    }

    #[test]
    fn degree_profiles() {
        let p = star(4).degree_profile();
        assert_eq!((p.min_degree, p.max_degree), (1, 4));
        assert_eq!((p.leaves.len(), p.supports.len(), p.delta_star), (4, 1, 2));

        let c = cycle(6).degree_profile();
        assert_eq!((c.min_degree, c.max_degree, c.delta_star), (2, 2, 2));
        assert!(c.leaves.is_empty() && c.supports.is_empty());

        // K2: both endpoints are leaves and supports.
        let k2 = path(2).degree_profile();
        assert_eq!((k2.leaves.len(), k2.supports.len(), k2.delta_star), (2, 2, 2));

        // An isolated vertex is neither leaf nor support and enters the minimum.
        let g = path(3).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(g.degree_profile().delta_star, 0);
    }
}
