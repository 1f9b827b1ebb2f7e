//! Gadget graphs that reduce maximum independent set to 2OID and DOID.
//!
//! Every vertex `v_i` of the input gets a private `K_{2,3}` with sides `A_i`
//! (two vertices) and `B_i` (three vertices), and `v_i` is joined to the first
//! vertex of `A_i`. The DOID gadget also joins the two vertices of `A_i`.
//! Both gadgets satisfy `param(G') = 3n - α(G)`.
//!
//! Numbering: original vertices keep `0..n`; block `i` occupies
//! `n + 5i .. n + 5i + 5`, with `A_i` first.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use crate::solvers::{value_with_budget, ParamKind, SolverError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReductionKind {
    TwoOidGadget,
    DoidGadget,
}

impl ReductionKind {
    /// Parameter the gadget is built for.
    pub fn param(self) -> ParamKind {
        match self {
            ReductionKind::TwoOidGadget => ParamKind::TwoOid,
            ReductionKind::DoidGadget => ParamKind::Doid,
        }
    }
}

impl FromStr for ReductionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2oid" => Ok(ReductionKind::TwoOidGadget),
            "doid" => Ok(ReductionKind::DoidGadget),
            _ => Err(format!("unknown reduction `{s}` (expected 2oid or doid)")),
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionKind::TwoOidGadget => "2oid",
            ReductionKind::DoidGadget => "doid",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("the input graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {0} is isolated; the reduction needs minimum degree at least 1")]
    IsolatedVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn reduce(g: &Graph, kind: ReductionKind) -> Result<Graph, ReductionError> {
    let n = g.order();
    if n == 0 {
        return Err(ReductionError::EmptyGraph);
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(ReductionError::IsolatedVertex(v));
    }
    if 6 * n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(6 * n).into());
    }
    let mut edges = g.edges();
    for i in 0..n {
        let base = n + 5 * i;
        let (a, b) = ([base, base + 1], [base + 2, base + 3, base + 4]);
        edges.push((i, a[0]));
        for &x in &a {
            for &y in &b {
                edges.push((x, y));
            }
        }
        if kind == ReductionKind::DoidGadget {
            edges.push((a[0], a[1]));
        }
    }
    Ok(Graph::from_edge_list(6 * n, &edges)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationStatus {
    Verified,
    Mismatch,
    /// The solver ran out of budget before finishing.
    Unverified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub alpha: usize,
    /// `None` when the search budget ran out.
    pub param_on_gadget: Option<usize>,
    pub expected: usize,
    pub status: VerificationStatus,
}

impl ReductionReport {
    pub fn identity_holds(&self) -> bool {
        self.status == VerificationStatus::Verified
    }
}

/// Search-node budget used by [`verify_reduction`].
pub const DEFAULT_BUDGET: u64 = 200_000_000;

pub fn verify_reduction(g: &Graph, kind: ReductionKind) -> Result<ReductionReport, ReductionError> {
    verify_reduction_with_budget(g, kind, DEFAULT_BUDGET)
}

pub fn verify_reduction_with_budget(
    g: &Graph,
    kind: ReductionKind,
    budget: u64,
) -> Result<ReductionReport, ReductionError> {
    let gadget = reduce(g, kind)?;
    let n = g.order();
    let alpha = value_with_budget(g, ParamKind::Alpha, u64::MAX)
        .expect("unbounded")
        .expect("α is always defined");
    let expected = 3 * n - alpha;
    let (param_on_gadget, status) = match value_with_budget(&gadget, kind.param(), budget) {
        Ok(Some(p)) if p == expected => (Some(p), VerificationStatus::Verified),
        Ok(p) => (p, VerificationStatus::Mismatch),
        Err(SolverError::BudgetExhausted(_)) => (None, VerificationStatus::Unverified),
        Err(e) => unreachable!("unexpected solver error {e}"),
    };
    Ok(ReductionReport {
        n,
        alpha,
        param_on_gadget,
        expected,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::solvers::value;

    #[test]
    fn structure() {
        let g = reduce(&path(2), ReductionKind::TwoOidGadget).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.size(), 1 + 14);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 7));
        for i in 0..2 {
            for b in 2 + 5 * i + 2..2 + 5 * i + 5 {
                assert_eq!(g.degree(b), 2);
            }
        }
        let d = reduce(&cycle(5), ReductionKind::DoidGadget).unwrap();
        assert_eq!(d.size(), 5 + 40);
        assert!(d.has_edge(5, 6));
    }

    #[test]
    fn rejects_isolated_vertices() {
        let g = path(2).disjoint_union(&edgeless(1)).unwrap();
        assert_eq!(
            reduce(&g, ReductionKind::TwoOidGadget),
            Err(ReductionError::IsolatedVertex(2))
        );
        assert_eq!(
            reduce(&edgeless(0), ReductionKind::DoidGadget),
            Err(ReductionError::EmptyGraph)
        );
    }

    #[test]
    fn small_gadget_values() {
        let two = ReductionKind::TwoOidGadget;
        assert_eq!(value(&reduce(&path(2), two).unwrap(), ParamKind::TwoOid), Some(5));
        assert_eq!(value(&reduce(&complete(3), two).unwrap(), ParamKind::TwoOid), Some(8));
        assert_eq!(value(&reduce(&cycle(5), two).unwrap(), ParamKind::TwoOid), Some(13));
        let doid = ReductionKind::DoidGadget;
        assert_eq!(value(&reduce(&path(2), doid).unwrap(), ParamKind::Doid), Some(5));
    }

    #[test]
    fn reports() {
        let r = verify_reduction(&path(2), ReductionKind::TwoOidGadget).unwrap();
        assert_eq!(
            (r.alpha, r.param_on_gadget, r.status),
            (1, Some(5), VerificationStatus::Verified)
        );
        let r = verify_reduction(&star(3), ReductionKind::TwoOidGadget).unwrap();
        assert_eq!((r.alpha, r.param_on_gadget), (3, Some(9)));
        let r = verify_reduction(&cycle(4), ReductionKind::TwoOidGadget).unwrap();
        assert_eq!((r.alpha, r.param_on_gadget), (2, Some(10)));
        assert!(r.identity_holds());
    }

    #[test]
    fn budget_exhaustion_is_unverified() {
        let r = verify_reduction_with_budget(&cycle(5), ReductionKind::DoidGadget, 2).unwrap();
        assert_eq!(r.status, VerificationStatus::Unverified);
        assert_eq!(r.param_on_gadget, None);
    }
}
