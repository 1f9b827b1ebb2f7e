//! Validity checkers and exact minimum solvers.
//!
//! The three outer-independent parameters are solved on the complement side:
//! if `S` is the dominating set, `I = V \ S` must be independent, so every
//! vertex of `I` has all of its neighbors in `S`. This gives
//!
//! * 2OID: `I` independent, every vertex of `I` has degree at least 2;
//! * TOID: `I` independent, every vertex of `I` has degree at least 1, and
//!   every vertex outside `I` keeps a neighbor outside `I`;
//! * DOID: as TOID with degree at least 2,
//!
//! and the parameter is `n - max |I|`. The classical domination numbers are
//! searched directly over `S`.
//!
//! Certificates are deterministic: among all optimal sets the solver returns
//! the one whose sorted vertex list is lexicographically smallest (the
//! maximum independent set for α, the dominating set for everything else).

mod complement;
mod domination;
mod naive;

pub use naive::{solve_naive, solve_naive_with_guard, NAIVE_GUARD};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

use complement::ComplementProblem;
use domination::DominationProblem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParamKind {
    /// Total outer-independent domination number.
    Toid,
    /// 2-outer-independent domination number.
    TwoOid,
    /// Double outer-independent domination number.
    Doid,
    /// Independence number.
    Alpha,
    /// Domination number.
    Gamma,
    /// Total domination number.
    GammaT,
    /// Double domination number.
    GammaX2,
}

impl ParamKind {
    pub const ALL: [ParamKind; 7] = [
        ParamKind::Toid,
        ParamKind::TwoOid,
        ParamKind::Doid,
        ParamKind::Alpha,
        ParamKind::Gamma,
        ParamKind::GammaT,
        ParamKind::GammaX2,
    ];

    /// Printable symbol used in CLI output and reports.
    pub fn symbol(self) -> &'static str {
        match self {
            ParamKind::Toid => "gamma_t^oi",
            ParamKind::TwoOid => "gamma_2^oi",
            ParamKind::Doid => "gamma_d^oi",
            ParamKind::Alpha => "alpha",
            ParamKind::Gamma => "gamma",
            ParamKind::GammaT => "gamma_t",
            ParamKind::GammaX2 => "gamma_x2",
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            ParamKind::Toid => "toid",
            ParamKind::TwoOid => "2oid",
            ParamKind::Doid => "doid",
            ParamKind::Alpha => "alpha",
            ParamKind::Gamma => "gamma",
            ParamKind::GammaT => "gamma-t",
            ParamKind::GammaX2 => "gamma-x2",
        }
    }

    /// Whether the parameter only exists on graphs without isolated vertices.
    pub fn requires_no_isolated(self) -> bool {
        matches!(
            self,
            ParamKind::Toid | ParamKind::Doid | ParamKind::GammaT | ParamKind::GammaX2
        )
    }

    /// α is a maximum; every other parameter is a minimum.
    pub fn is_maximum(self) -> bool {
        self == ParamKind::Alpha
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for ParamKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ParamKind::ALL.into_iter().find(|k| k.cli_name() == s).ok_or_else(|| {
            format!("unknown parameter `{s}` (expected toid, 2oid, doid, alpha, gamma, gamma-t or gamma-x2)")
        })
    }
}

/// Value of a parameter together with an optimal certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamResult {
    /// The parameter does not exist (isolated vertex for TOID, DOID, γ_t, γ_×2).
    Undefined,
    Defined {
        value: usize,
        certificate: VertexSet,
    },
}

impl ParamResult {
    pub fn value(&self) -> Option<usize> {
        match *self {
            ParamResult::Defined { value, .. } => Some(value),
            ParamResult::Undefined => None,
        }
    }

    pub fn certificate(&self) -> Option<VertexSet> {
        match *self {
            ParamResult::Defined { certificate, .. } => Some(certificate),
            ParamResult::Undefined => None,
        }
    }

    fn from_set(certificate: VertexSet) -> Self {
        ParamResult::Defined {
            value: certificate.len(),
            certificate,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("exhaustive enumeration is limited to {guard} vertices, got {n}")]
    GuardExceeded { n: usize, guard: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
}

/// First condition a candidate set violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetViolation {
    VertexOutOfRange(usize),
    /// Two vertices outside the set are adjacent.
    ComplementNotIndependent(usize, usize),
    /// Two vertices of the set are adjacent (α only).
    NotIndependent(usize, usize),
    /// The vertex needs a neighbor in the set and has none.
    NoNeighborInSet(usize),
    /// A vertex outside the set has fewer than two neighbors in it.
    TooFewNeighborsInSet {
        vertex: usize,
        count: usize,
    },
    /// `|N[v] ∩ S| < 2`.
    ClosedNeighborhoodTooSmall {
        vertex: usize,
        count: usize,
    },
}

impl fmt::Display for SetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SetViolation::VertexOutOfRange(v) => write!(f, "vertex {v} is not a vertex of the graph"),
            SetViolation::ComplementNotIndependent(u, v) => {
                write!(f, "outer independence fails: vertices {u} and {v} outside the set are adjacent")
            }
            SetViolation::NotIndependent(u, v) => {
                write!(f, "independence fails: vertices {u} and {v} are adjacent")
            }
            SetViolation::NoNeighborInSet(v) => write!(f, "domination fails: vertex {v} has no neighbor in the set"),
            SetViolation::TooFewNeighborsInSet { vertex, count } => write!(
                f,
                "2-domination fails: vertex {vertex} is outside the set with {count} neighbor(s) in it"
            ),
            SetViolation::ClosedNeighborhoodTooSmall { vertex, count } => write!(
                f,
                "double domination fails: closed neighborhood of vertex {vertex} meets the set in {count} vertex/vertices"
            ),
        }
    }
}

/// Returns the first violated condition, checking independence first and
/// then vertices in increasing order.
pub fn find_violation(g: &Graph, s: VertexSet, kind: ParamKind) -> Option<SetViolation> {
    let n = g.order();
    if n < 64 && s.bits() >> n != 0 {
        return Some(SetViolation::VertexOutOfRange(
            (s.bits() >> n << n).trailing_zeros() as usize
        ));
    }
    let adj = g.adjacency();
    let outside = s.complement(n).bits();
    let inside = s.bits();

    match kind {
        ParamKind::Alpha => {
            for v in s.iter() {
                if let Some(u) = VertexSet::from_bits(adj[v] & inside).iter().find(|&u| u > v) {
                    return Some(SetViolation::NotIndependent(v, u));
                }
            }
            return None;
        }
        ParamKind::Toid | ParamKind::TwoOid | ParamKind::Doid => {
            for v in VertexSet::from_bits(outside).iter() {
                if let Some(u) = VertexSet::from_bits(adj[v] & outside).iter().find(|&u| u > v) {
                    return Some(SetViolation::ComplementNotIndependent(v, u));
                }
            }
        }
        _ => {}
    }

    for (v, &row) in adj.iter().enumerate().take(n) {
        let in_s = inside >> v & 1 == 1;
        let open = (row & inside).count_ones() as usize;
        let violation = match kind {
            ParamKind::Toid | ParamKind::GammaT if open == 0 => Some(SetViolation::NoNeighborInSet(v)),
            ParamKind::Gamma if !in_s && open == 0 => Some(SetViolation::NoNeighborInSet(v)),
            ParamKind::TwoOid if !in_s && open < 2 => {
                Some(SetViolation::TooFewNeighborsInSet { vertex: v, count: open })
            }
            ParamKind::Doid | ParamKind::GammaX2 if open + (in_s as usize) < 2 => {
                Some(SetViolation::ClosedNeighborhoodTooSmall {
                    vertex: v,
                    count: open + in_s as usize,
                })
            }
            _ => None,
        };
        if violation.is_some() {
            return violation;
        }
    }
    None
}

/// True iff `s` satisfies the defining conditions of `kind` (for α: `s` is
/// independent).
pub fn check_set(g: &Graph, s: VertexSet, kind: ParamKind) -> bool {
    find_violation(g, s, kind).is_none()
}

pub fn is_defined(g: &Graph, kind: ParamKind) -> bool {
    !(kind.requires_no_isolated() && g.has_isolated_vertex())
}

fn complement_problem(g: &Graph, kind: ParamKind) -> ComplementProblem<'_> {
    let min_degree = match kind {
        ParamKind::Alpha => 0,
        ParamKind::Toid => 1,
        _ => 2,
    };
    let eligible = (0..g.order())
        .filter(|&v| g.degree(v) >= min_degree)
        .fold(0u64, |m, v| m | 1 << v);
    ComplementProblem::new(
        g.adjacency(),
        eligible,
        matches!(kind, ParamKind::Toid | ParamKind::Doid),
    )
}

fn domination_problem(g: &Graph, kind: ParamKind) -> DominationProblem<'_> {
    match kind {
        ParamKind::Gamma => DominationProblem::new(g.adjacency(), true, 1),
        ParamKind::GammaT => DominationProblem::new(g.adjacency(), false, 1),
        ParamKind::GammaX2 => DominationProblem::new(g.adjacency(), true, 2),
        _ => unreachable!("not a direct domination parameter"),
    }
}

/// Optimal value and lexicographically smallest optimal certificate.
pub fn solve(g: &Graph, kind: ParamKind) -> ParamResult {
    solve_with_budget(g, kind, u64::MAX).expect("unbounded search cannot exhaust its budget")
}

/// [`solve`] with a cap on search nodes.
pub fn solve_with_budget(g: &Graph, kind: ParamKind, budget: u64) -> Result<ParamResult, SolverError> {
    if !is_defined(g, kind) {
        return Ok(ParamResult::Undefined);
    }
    let n = g.order();
    let result = match kind {
        ParamKind::Alpha => {
            let i = complement_problem(g, kind).certificate(true, budget)?;
            ParamResult::from_set(VertexSet::from_bits(i))
        }
        ParamKind::Toid | ParamKind::TwoOid | ParamKind::Doid => {
            let i = complement_problem(g, kind).certificate(false, budget)?;
            ParamResult::from_set(VertexSet::from_bits(i).complement(n))
        }
        _ => ParamResult::from_set(VertexSet::from_bits(domination_problem(g, kind).solve(budget)?)),
    };
    Ok(result)
}

/// Optimal value only; skips the certificate pass.
pub fn value(g: &Graph, kind: ParamKind) -> Option<usize> {
    value_with_budget(g, kind, u64::MAX).expect("unbounded search cannot exhaust its budget")
}

pub fn value_with_budget(g: &Graph, kind: ParamKind, budget: u64) -> Result<Option<usize>, SolverError> {
    if !is_defined(g, kind) {
        return Ok(None);
    }
    let v = match kind {
        ParamKind::Alpha => complement_problem(g, kind).max_size(budget)?,
        ParamKind::Toid | ParamKind::TwoOid | ParamKind::Doid => {
            g.order() - complement_problem(g, kind).max_size(budget)?
        }
        _ => domination_problem(g, kind).solve(budget)?.count_ones() as usize,
    };
    Ok(Some(v))
}
