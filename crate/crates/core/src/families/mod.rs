//! Generators, recognizers and fixed examples for the extremal graph families.
//!
//! Vertex numbering of generated graphs:
//!
//! | family | layout |
//! |---|---|
//! | Λ | `a = 0`, `b = 1`, then `A`, `B`, `C` |
//! | Φ | `x = 0`, `K \ {x} = 1..p`, `J = p..n` |
//! | Ψ | `x = 0`, `K \ {x} = 1..4`, `R = 4..n` |
//! | Ω | `v_i = 2i`, `v_i' = 2i + 1` for all `a + b` pendant edges, then `u_1..u_p`, then the extra leaves of each `v_{a+i}` in order |
//! | 𝒢 | `Q = 0..q`, then `P` |
//! | Θ | clique `0..q`, `u = q`, `w = q + 1` |
//! | H | cycle `0..2k`, then the `K_p` blocks |
//! | grid | `(i, j) -> 2i + j` |

mod fixtures;
mod recognize;

pub use fixtures::{fixture, Fixture};
pub use recognize::{in_gcal, in_lambda, in_omega, in_phi, in_psi, in_theta, recognize, Family, OMEGA_CAP};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{named, Graph, GraphError};

/// Attempts made by rejection sampling before giving up.
pub const RETRY_CAP: usize = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("constraints cannot be satisfied: {0}")]
    Unsatisfiable(String),
    #[error("no valid edge choice found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("unknown fixture `{0}` (expected H1, H2, PSI_FIG1 or OMEGA_FIG3)")]
    UnknownFixture(String),
    #[error("unknown graph name `{0}` (expected K<n>, C<n>, P<n>, E<n>, K<a>,<b> or <t>P2)")]
    UnknownClassic(String),
    #[error("recognizer is limited to {cap} vertices, got {n}")]
    CapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn invalid(msg: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters(msg.into())
}

/// A family member description. Randomized edge choices are drawn from
/// `seed`; explicit choices, when given, replace the random draw.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Lambda {
        a: usize,
        b: usize,
        c: usize,
    },
    Phi {
        n: usize,
        p: usize,
        #[serde(default)]
        seed: u64,
        /// Edges between `K \ {x}` and `J`, in the generated numbering.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cross_edges: Option<Vec<(usize, usize)>>,
    },
    Psi {
        n: usize,
        #[serde(default)]
        seed: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        cross_edges: Option<Vec<(usize, usize)>>,
    },
    Omega {
        a: usize,
        b: usize,
        r: usize,
        p: usize,
        /// Extra leaves `k_{a+1}, ..., k_{a+b}`; missing entries are 0.
        #[serde(default)]
        leaves: Vec<usize>,
        #[serde(default)]
        seed: u64,
        /// Neighbors of each `u_i`, in the generated numbering.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        attachments: Option<Vec<Vec<usize>>>,
    },
    Gcal {
        p: usize,
        q: usize,
        #[serde(default)]
        seed: u64,
        /// The two `Q` neighbors of each `P` vertex, as indices into `Q`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pairs: Option<Vec<(usize, usize)>>,
    },
    Theta {
        q: usize,
        /// Clique vertex not joined to `u`; defaults to `q - 1`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        missing: Option<usize>,
    },
    H {
        k: usize,
        p: usize,
    },
    Grid {
        k: usize,
    },
    Classic {
        name: String,
    },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    match spec {
        FamilySpec::Lambda { a, b, c } => lambda(*a, *b, *c),
        FamilySpec::Phi {
            n,
            p,
            seed,
            cross_edges,
        } => {
            if *p < 3 || *p + 2 > *n {
                return Err(invalid(format!("Φ needs 3 <= p <= n - 2, got n = {n}, p = {p}")));
            }
            clique_with_cross_edges(*n, *p, 1, *seed, cross_edges.as_deref())
        }
        FamilySpec::Psi { n, seed, cross_edges } => {
            if *n < 6 {
                return Err(invalid(format!("Ψ needs n >= 6, got {n}")));
            }
            // Each R vertex needs two of the three neighbors while each of
            // them takes at most |R| - 2: 2|R| <= 3(|R| - 2).
            if *n < 10 {
                return Err(FamilyError::Unsatisfiable(format!(
                    "Ψ with |R| = {} needs at least {} cross edges but admits at most {}",
                    n - 4,
                    2 * (n - 4),
                    3 * (n - 6)
                )));
            }
            clique_with_cross_edges(*n, 4, 2, *seed, cross_edges.as_deref())
        }
        FamilySpec::Omega {
            a,
            b,
            r,
            p,
            leaves,
            seed,
            attachments,
        } => omega(*a, *b, *r, *p, leaves, *seed, attachments.as_deref()),
        FamilySpec::Gcal { p, q, seed, pairs } => gcal(*p, *q, *seed, pairs.as_deref()),
        FamilySpec::Theta { q, missing } => theta(*q, missing.unwrap_or(q.saturating_sub(1))),
        FamilySpec::H { k, p } => h_family(*k, *p),
        FamilySpec::Grid { k } => {
            if *k == 0 || 6 * k > 64 {
                return Err(invalid(format!("grid needs 1 <= k <= 10, got {k}")));
            }
            Ok(named::grid(3 * k, 2))
        }
        FamilySpec::Classic { name } => classic(name),
    }
}

fn lambda(a: usize, b: usize, c: usize) -> Result<Graph, FamilyError> {
    if a == 0 || b == 0 || c == 0 {
        return Err(invalid("Λ needs |A|, |B|, |C| >= 1"));
    }
    let n = 2 + a + b + c;
    let mut edges = vec![(0, 1)];
    edges.extend((2..2 + a).map(|v| (0, v)));
    edges.extend((2 + a..2 + a + b).map(|v| (1, v)));
    for v in 2 + a + b..n {
        edges.push((0, v));
        edges.push((1, v));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Φ (`floor = 1`) and Ψ (`p = 4`, `floor = 2`): `K_p` on `0..p` with `x = 0`,
/// the independent set `J = p..n`, and cross edges between `1..p` and `J`
/// such that every `J` vertex has at least `floor` of them and every clique
/// vertex misses at least `floor` vertices of `J`.
fn clique_with_cross_edges(
    n: usize,
    p: usize,
    floor: usize,
    seed: u64,
    explicit: Option<&[(usize, usize)]>,
) -> Result<Graph, FamilyError> {
    let j = n - p;
    let valid = |cross: &[(usize, usize)]| {
        let mut kdeg = vec![0; p];
        let mut jdeg = vec![0; n];
        for &(k, v) in cross {
            kdeg[k] += 1;
            jdeg[v] += 1;
        }
        (p..n).all(|v| jdeg[v] >= floor) && (1..p).all(|k| kdeg[k] + floor <= j)
    };

    let cross: Vec<(usize, usize)> = match explicit {
        Some(edges) => {
            let mut cross = Vec::with_capacity(edges.len());
            for &(u, v) in edges {
                let (k, v) = if u < v { (u, v) } else { (v, u) };
                if !(1..p).contains(&k) || !(p..n).contains(&v) {
                    return Err(invalid(format!("cross edge ({u}, {v}) must join 1..{p} to {p}..{n}")));
                }
                cross.push((k, v));
            }
            cross.sort_unstable();
            cross.dedup();
            if !valid(&cross) {
                return Err(invalid("explicit cross edges violate the degree conditions"));
            }
            cross
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let side: Vec<usize> = (1..p).collect();
            let mut attempt = 0;
            loop {
                if attempt == RETRY_CAP {
                    return Err(FamilyError::RetriesExhausted(RETRY_CAP));
                }
                attempt += 1;
                let mut cross = Vec::new();
                for v in p..n {
                    let size = rng.gen_range(floor..=side.len());
                    for &k in side.choose_multiple(&mut rng, size) {
                        cross.push((k, v));
                    }
                }
                if valid(&cross) {
                    cross.sort_unstable();
                    break cross;
                }
            }
        }
    };

    let mut edges: Vec<(usize, usize)> = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v))).collect();
    edges.extend(cross);
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn omega(
    a: usize,
    b: usize,
    r: usize,
    p: usize,
    leaves: &[usize],
    seed: u64,
    explicit: Option<&[Vec<usize>]>,
) -> Result<Graph, FamilyError> {
    if a + b == 0 {
        return Err(invalid("Ω needs a + b >= 1"));
    }
    if r < 2 {
        return Err(invalid("Ω needs r >= 2"));
    }
    if 2 * a * (r - 1) > p * r {
        return Err(invalid(format!(
            "Ω needs 2a(r - 1) <= pr, got a = {a}, r = {r}, p = {p}"
        )));
    }
    if leaves.len() > b {
        return Err(invalid(format!("{} leaf counts given for b = {b}", leaves.len())));
    }
    let attach_set: Vec<usize> = (0..2 * a).chain((a..a + b).map(|i| 2 * i)).collect();
    if p > 0 && attach_set.len() < r {
        return Err(FamilyError::Unsatisfiable(format!(
            "each u needs {r} neighbors but only {} attachment vertices exist",
            attach_set.len()
        )));
    }
    // v_i and v_i' each need r - 1 distinct u neighbors.
    if a > 0 && p + 1 < r {
        return Err(FamilyError::Unsatisfiable(format!(
            "the {} vertices of B need r - 1 = {} neighbors among only p = {p} vertices u",
            2 * a,
            r - 1
        )));
    }

    let first_u = 2 * (a + b);
    let attachments: Vec<Vec<usize>> = match explicit {
        Some(lists) => {
            if lists.len() != p {
                return Err(invalid(format!("{} attachment lists given for p = {p}", lists.len())));
            }
            let mut out = Vec::with_capacity(p);
            for list in lists {
                let mut list = list.clone();
                list.sort_unstable();
                list.dedup();
                if list.len() != r || list.iter().any(|v| !attach_set.contains(v)) {
                    return Err(invalid(format!(
                        "attachment list {list:?} must hold {r} distinct vertices of A"
                    )));
                }
                out.push(list);
            }
            let mut udeg = vec![0; first_u];
            out.iter().flatten().for_each(|&v| udeg[v] += 1);
            if (0..2 * a).any(|v| udeg[v] + 1 < r) {
                return Err(invalid("a vertex of B ends with degree below r"));
            }
            out
        }
        None => {
            // Deal the B demands round-robin so that each B vertex lands in
            // r - 1 different u's, then top every u up to r neighbors.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (0..2 * a).collect();
            order.shuffle(&mut rng);
            let offset = if p > 0 { rng.gen_range(0..p) } else { 0 };
            let mut lists = vec![Vec::with_capacity(r); p];
            for (slot, v) in order.iter().flat_map(|&v| std::iter::repeat_n(v, r - 1)).enumerate() {
                lists[(slot + offset) % p].push(v);
            }
            for list in &mut lists {
                let rest: Vec<usize> = attach_set.iter().copied().filter(|v| !list.contains(v)).collect();
                let missing = r - list.len();
                list.extend(rest.choose_multiple(&mut rng, missing));
                list.sort_unstable();
            }
            lists
        }
    };

    let extra: usize = leaves.iter().sum();
    let n = first_u + p + extra;
    let mut edges: Vec<(usize, usize)> = (0..a + b).map(|i| (2 * i, 2 * i + 1)).collect();
    for (i, list) in attachments.iter().enumerate() {
        edges.extend(list.iter().map(|&v| (v, first_u + i)));
    }
    let mut next = first_u + p;
    for (i, &k) in leaves.iter().enumerate() {
        let center = 2 * (a + i);
        for _ in 0..k {
            edges.push((center, next));
            next += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn gcal(p: usize, q: usize, seed: u64, explicit: Option<&[(usize, usize)]>) -> Result<Graph, FamilyError> {
    if p == 0 || q < 2 {
        return Err(invalid(format!("𝒢 needs |P| >= 1 and |Q| >= 2, got {p} and {q}")));
    }
    let pairs: Vec<(usize, usize)> = match explicit {
        Some(pairs) => {
            if pairs.len() != p {
                return Err(invalid(format!("{} pairs given for |P| = {p}", pairs.len())));
            }
            for &(x, y) in pairs {
                if x == y || x >= q || y >= q {
                    return Err(invalid(format!("pair ({x}, {y}) must name two distinct vertices of Q")));
                }
            }
            pairs.to_vec()
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let qs: Vec<usize> = (0..q).collect();
            (0..p)
                .map(|_| {
                    let two: Vec<usize> = qs.choose_multiple(&mut rng, 2).copied().collect();
                    (two[0], two[1])
                })
                .collect()
        }
    };
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .flat_map(|(i, &(x, y))| [(x, q + i), (y, q + i)])
        .collect();
    Ok(Graph::from_edge_list(p + q, &edges)?)
}

fn theta(q: usize, missing: usize) -> Result<Graph, FamilyError> {
    if q < 3 {
        return Err(invalid(format!("Θ needs a clique on at least 3 vertices, got {q}")));
    }
    if missing >= q {
        return Err(invalid(format!("missing vertex {missing} is not in the clique 0..{q}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..q).flat_map(|u| (u + 1..q).map(move |v| (u, v))).collect();
    edges.extend((0..q).filter(|&c| c != missing).map(|c| (c, q)));
    edges.push((q, q + 1));
    Ok(Graph::from_edge_list(q + 2, &edges)?)
}

fn h_family(k: usize, p: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(invalid(format!("H needs k >= 2 (C_2k must be a cycle), got {k}")));
    }
    let n = 2 * k + k * p;
    let mut edges: Vec<(usize, usize)> = (0..2 * k).map(|i| (i, (i + 1) % (2 * k))).collect();
    for i in 0..k {
        let block = 2 * k + i * p;
        for s in block..block + p {
            edges.push((2 * i, s));
            edges.push((2 * i + 1, s));
            edges.extend((s + 1..block + p).map(|t| (s, t)));
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `K<n>`, `C<n>`, `P<n>`, `E<n>` (edgeless), `K<a>,<b>`, `<t>P2`.
pub fn classic(name: &str) -> Result<Graph, FamilyError> {
    let unknown = || FamilyError::UnknownClassic(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let check = |n: usize| {
        if n > 64 {
            Err(FamilyError::Graph(GraphError::TooManyVertices(n)))
        } else {
            Ok(n)
        }
    };

    if let Some(t) = name.strip_suffix("P2").filter(|t| !t.is_empty()) {
        let t = num(t)?;
        check(2 * t)?;
        return Ok(named::matching(t));
    }
    let (head, rest) = name.split_at(name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?);
    if head == "K" {
        if let Some((a, b)) = rest.split_once(',') {
            let (a, b) = (num(a)?, num(b)?);
            check(a + b)?;
            return Ok(named::complete_bipartite(a, b));
        }
    }
    let n = check(num(rest)?)?;
    match head {
        "K" => Ok(named::complete(n)),
        "C" if n >= 3 => Ok(named::cycle(n)),
        "P" => Ok(named::path(n)),
        "E" => Ok(named::edgeless(n)),
        _ => Err(unknown()),
    }
}
