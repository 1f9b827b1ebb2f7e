//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest column-major upper-triangle bit
//! string over all vertex orderings that respect an equitable color
//! refinement seeded with degrees. Refinement colors are isomorphism
//! invariant, so restricting the search to color-respecting orderings keeps
//! the minimum canonical while pruning most of the `n!` permutations.

use super::{Graph, GraphError, VertexSet};

/// Default order limit for [`are_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 10;

/// Hard limit imposed by the 128-bit code.
const CODE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; self.n];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.code >> (total - 1 - k) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).expect("signature present"))
            .collect();
        if sorted.len() == classes {
            return next;
        }
        classes = sorted.len();
        color = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    total: usize,
    /// `slot_cell[k]`: color class whose vertices may occupy position `k`.
    slot_cell: Vec<u64>,
    placed: Vec<usize>,
    best: Option<u128>,
}

impl Search<'_> {
    fn run(&mut self, k: usize, used: u64, code: u128, bits: usize) {
        if let Some(best) = self.best {
            if code > best >> (self.total - bits) {
                return;
            }
        }
        if k == self.g.order() {
            if self.best.is_none_or(|b| code < b) {
                self.best = Some(code);
            }
            return;
        }
        for v in VertexSet::from_bits(self.slot_cell[k] & !used).iter() {
            let mut c = code;
            for &u in &self.placed {
                c = c << 1 | self.g.has_edge(u, v) as u128;
            }
            self.placed.push(v);
            self.run(k + 1, used | 1 << v, c, bits + k);
            self.placed.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = g.order();
    if n > CODE_CAP {
        return Err(GraphError::IsoCapExceeded { n, cap: CODE_CAP });
    }
    let color = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    let slot_cell = order
        .iter()
        .map(|&v| (0..n).filter(|&u| color[u] == color[v]).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut search = Search {
        g,
        total: n * n.saturating_sub(1) / 2,
        slot_cell,
        placed: Vec::with_capacity(n),
        best: None,
    };
    search.run(0, 0, 0, 0);
    Ok(CanonicalForm {
        n,
        code: search.best.unwrap_or(0),
    })
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    are_isomorphic_with_cap(g, h, DEFAULT_ISO_CAP)
}

pub fn are_isomorphic_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.order() > cap.min(CODE_CAP) {
            return Err(GraphError::IsoCapExceeded {
                n: x.order(),
                cap: cap.min(CODE_CAP),
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.order()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn known_small_cases() {
        assert!(are_isomorphic(&cycle(5), &cycle(5).complement()).unwrap());
        assert!(!are_isomorphic(&path(4), &star(3)).unwrap());
        assert!(!are_isomorphic(&cycle(4), &matching(2)).unwrap());
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 and 2K3 are both 2-regular on six vertices.
        let two_triangles = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(!are_isomorphic(&cycle(6), &two_triangles).unwrap());
        // Prism and K3,3 are both cubic on six vertices.
        let k33 = complete_bipartite(3, 3);
        let prism = Graph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(!are_isomorphic(&prism, &k33).unwrap());
    }

    #[test]
    fn canonical_representative_is_isomorphic() {
        let g = Graph::from_edge_list(6, &[(0, 5), (5, 2), (2, 3), (1, 4)]).unwrap();
        let c = canonical_form(&g).unwrap();
        let rep = c.to_graph();
        assert_eq!(canonical_form(&rep).unwrap(), c);
        assert!(are_isomorphic(&rep, &g).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(are_isomorphic(&cycle(11), &cycle(11)).is_err());
        assert!(are_isomorphic_with_cap(&cycle(11), &cycle(11), 12).unwrap());
        assert!(canonical_form(&cycle(17)).is_err());
    }
}
