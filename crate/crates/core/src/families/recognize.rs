//! Membership tests up to isomorphism.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::FamilyError;
use crate::graph::{Graph, VertexSet};

/// Order limit for [`in_omega`].
pub const OMEGA_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Lambda,
    Phi,
    Psi,
    Omega,
    Gcal,
    Theta,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Lambda,
        Family::Phi,
        Family::Psi,
        Family::Omega,
        Family::Gcal,
        Family::Theta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Lambda => "lambda",
            Family::Phi => "phi",
            Family::Psi => "psi",
            Family::Omega => "omega",
            Family::Gcal => "gcal",
            Family::Theta => "theta",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}` (expected lambda, phi, psi, omega, gcal or theta)"))
    }
}

pub fn recognize(g: &Graph, family: Family) -> Result<bool, FamilyError> {
    Ok(match family {
        Family::Lambda => in_lambda(g),
        Family::Phi => in_phi(g),
        Family::Psi => in_psi(g),
        Family::Omega => in_omega(g)?,
        Family::Gcal => in_gcal(g),
        Family::Theta => in_theta(g),
    })
}

/// Λ: an edge `ab` such that every other vertex is adjacent to `a`, `b` or
/// both and to nothing else, with all three kinds present.
pub fn in_lambda(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 {
        return false;
    }
    let adj = g.adjacency();
    g.edges().into_iter().any(|(a, b)| {
        let ab = 1u64 << a | 1u64 << b;
        let rest = g.vertices().bits() & !ab;
        let mut kinds = [false; 3];
        for v in VertexSet::from_bits(rest).iter() {
            if adj[v] & !ab != 0 {
                return false;
            }
            match (adj[v] >> a & 1, adj[v] >> b & 1) {
                (1, 0) => kinds[0] = true,
                (0, 1) => kinds[1] = true,
                (1, 1) => kinds[2] = true,
                _ => return false,
            }
        }
        kinds.iter().all(|&k| k)
    })
}

/// Shared test for Φ and Ψ: some `x` with `K = N[x]` a clique of admissible
/// size, `J = V \ K` independent, every `J` vertex with at least `floor`
/// neighbors in `K \ {x}`, and every vertex of `K \ {x}` missing at least
/// `floor` vertices of `J`.
fn clique_with_cross_edges(g: &Graph, sizes: impl Fn(usize) -> bool, floor: u32) -> bool {
    let n = g.order();
    let adj = g.adjacency();
    let all = g.vertices().bits();
    (0..n).any(|x| {
        let k = adj[x] | 1 << x;
        let p = k.count_ones() as usize;
        if !sizes(p) {
            return false;
        }
        let j = all & !k;
        let jlen = j.count_ones();
        let kx = k & !(1 << x);
        VertexSet::from_bits(k).iter().all(|v| (adj[v] | 1 << v) & k == k)
            && VertexSet::from_bits(j)
                .iter()
                .all(|v| adj[v] & j == 0 && (adj[v] & kx).count_ones() >= floor)
            && VertexSet::from_bits(kx)
                .iter()
                .all(|v| (adj[v] & j).count_ones() + floor <= jlen)
    })
}

pub fn in_phi(g: &Graph) -> bool {
    let n = g.order();
    clique_with_cross_edges(g, |p| p >= 3 && p + 2 <= n, 1)
}

pub fn in_psi(g: &Graph) -> bool {
    g.order() >= 6 && clique_with_cross_edges(g, |p| p == 4, 2)
}

/// 𝒢: bipartite with one side of every nontrivial component made of
/// degree-2 vertices. Isolated vertices join `Q`; `|P| >= 1` forces an edge,
/// and any `P` vertex brings two `Q` vertices with it.
pub fn in_gcal(g: &Graph) -> bool {
    if g.size() == 0 || !g.is_bipartite() {
        return false;
    }
    let adj = g.adjacency();
    g.components().into_iter().filter(|c| c.len() > 1).all(|comp| {
        let start = comp.iter().next().expect("nonempty component");
        let mut side = 1u64 << start;
        let mut frontier = side;
        let mut seen = side;
        let mut parity = false;
        let mut other = 0u64;
        while frontier != 0 {
            let next = VertexSet::from_bits(frontier).iter().fold(0, |m, v| m | adj[v]) & !seen;
            seen |= next;
            parity = !parity;
            if parity {
                other |= next;
            } else {
                side |= next;
            }
            frontier = next;
        }
        [side, other]
            .iter()
            .any(|&s| VertexSet::from_bits(s).iter().all(|v| g.degree(v) == 2))
    })
}

/// Θ: a pendant edge `uw` (`w` the leaf) with the rest a clique on at least
/// three vertices, of which `u` sees all but one.
pub fn in_theta(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 {
        return false;
    }
    let adj = g.adjacency();
    (0..n).filter(|&w| g.degree(w) == 1).any(|w| {
        let u = adj[w].trailing_zeros() as usize;
        let clique = g.vertices().bits() & !(1 << u | 1 << w);
        let q = clique.count_ones();
        VertexSet::from_bits(clique)
            .iter()
            .all(|c| adj[c] & clique == clique & !(1 << c))
            && (adj[u] & clique).count_ones() == q - 1
    })
}

/// Ω: either an isolate-free galaxy, or an independent set `U` of vertices
/// of a common degree `r >= 2` such that `D = V \ U` induces a star forest in
/// which
///
/// * a `K_2` either has both ends of degree at least `r`, or one end with no
///   neighbor in `U`;
/// * the leaves of a larger star have no neighbor in `U`.
///
/// Vertices of `U` can be neither leaves nor supports, which bounds the
/// candidates for `U`.
pub fn in_omega(g: &Graph) -> Result<bool, FamilyError> {
    let n = g.order();
    if n > OMEGA_CAP {
        return Err(FamilyError::CapExceeded { n, cap: OMEGA_CAP });
    }
    if n == 0 || g.has_isolated_vertex() {
        return Ok(false);
    }
    if star_forest(g, g.vertices().bits()).is_some() {
        return Ok(true);
    }
    let profile = g.degree_profile();
    let inner = g.vertices().bits() & !profile.leaves.bits() & !profile.supports.bits();
    for r in 2..=g.max_degree() {
        let cands: Vec<usize> = VertexSet::from_bits(inner)
            .iter()
            .filter(|&v| g.degree(v) == r)
            .collect();
        if omega_search(g, r, &cands, 0, 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn omega_search(g: &Graph, r: usize, cands: &[usize], i: usize, u: u64) -> bool {
    if i == cands.len() {
        return u != 0 && omega_decomposition_ok(g, r, u);
    }
    let v = cands[i];
    (g.adjacency()[v] & u == 0 && omega_search(g, r, cands, i + 1, u | 1 << v)) || omega_search(g, r, cands, i + 1, u)
}

fn omega_decomposition_ok(g: &Graph, r: usize, u: u64) -> bool {
    let adj = g.adjacency();
    let d = g.vertices().bits() & !u;
    let Some(stars) = star_forest(g, d) else {
        return false;
    };
    let touches_u = |v: usize| adj[v] & u != 0;
    stars.into_iter().all(|(center, leaves)| {
        if leaves.len() == 1 {
            let other = leaves.iter().next().expect("one leaf");
            (g.degree(center) >= r && g.degree(other) >= r) || !touches_u(center) || !touches_u(other)
        } else {
            leaves.iter().all(|l| !touches_u(l))
        }
    })
}

/// Decomposes `G[d]` into stars with at least one edge, as (center, leaves)
/// pairs. `None` if some component is not such a star.
fn star_forest(g: &Graph, d: u64) -> Option<Vec<(usize, VertexSet)>> {
    let adj = g.adjacency();
    let mut out = Vec::new();
    let mut rest = d;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let nv = adj[v] & d;
        let (center, leaves) = match nv.count_ones() {
            0 => return None,
            1 => {
                let w = nv.trailing_zeros() as usize;
                if (adj[w] & d).count_ones() == 1 {
                    (v, VertexSet::from_bits(nv))
                } else {
                    (w, VertexSet::from_bits(adj[w] & d))
                }
            }
            _ => (v, VertexSet::from_bits(nv)),
        };
        if leaves.iter().any(|l| adj[l] & d != 1 << center) {
            return None;
        }
        out.push((center, leaves));
        rest &= !(leaves.bits() | 1 << center);
    }
    Some(out)
}
