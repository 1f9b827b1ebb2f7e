//! The theorem registry: applicability filters, checks and equality
//! characterizations, all in exact integer arithmetic.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::VerifierError;
use crate::families::{in_gcal, in_lambda, in_omega, in_phi, in_psi, in_theta};
use crate::graph::{are_isomorphic, named, to_graph6, Graph};
use crate::reductions::{reduce, ReductionKind};
use crate::solvers::{value, ParamKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    L1SumBounds,
    L2ToidNMinus1,
    T3ProductToid,
    T4SumEqPhi,
    T5Product2oid,
    DoidSum2n,
    DoidSum2nMinus1,
    DoidProductLower,
    TDeltaUpper,
    E8Identity,
    ClawfreeLower,
    ClawfreeEquality,
    CubicClawfreeSandwich,
    TrianglefreeAlpha,
    TrianglefreeUpper,
    DeltastarLower,
    TreeCorollary,
    P1LowerAndGcal,
    BipartiteUpper,
    NpIdentity,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
        TheoremId::L1SumBounds,
        TheoremId::L2ToidNMinus1,
        TheoremId::T3ProductToid,
        TheoremId::T4SumEqPhi,
        TheoremId::T5Product2oid,
        TheoremId::DoidSum2n,
        TheoremId::DoidSum2nMinus1,
        TheoremId::DoidProductLower,
        TheoremId::TDeltaUpper,
        TheoremId::E8Identity,
        TheoremId::ClawfreeLower,
        TheoremId::ClawfreeEquality,
        TheoremId::CubicClawfreeSandwich,
        TheoremId::TrianglefreeAlpha,
        TheoremId::TrianglefreeUpper,
        TheoremId::DeltastarLower,
        TheoremId::TreeCorollary,
        TheoremId::P1LowerAndGcal,
        TheoremId::BipartiteUpper,
        TheoremId::NpIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::L1SumBounds => "L1_SUM_BOUNDS",
            TheoremId::L2ToidNMinus1 => "L2_TOID_N_MINUS_1",
            TheoremId::T3ProductToid => "T3_PRODUCT_TOID",
            TheoremId::T4SumEqPhi => "T4_SUM_EQ_PHI",
            TheoremId::T5Product2oid => "T5_PRODUCT_2OID",
            TheoremId::DoidSum2n => "DOID_SUM_2N",
            TheoremId::DoidSum2nMinus1 => "DOID_SUM_2N_MINUS_1",
            TheoremId::DoidProductLower => "DOID_PRODUCT_LOWER",
            TheoremId::TDeltaUpper => "T_DELTA_UPPER",
            TheoremId::E8Identity => "E8_IDENTITY",
            TheoremId::ClawfreeLower => "CLAWFREE_LOWER",
            TheoremId::ClawfreeEquality => "CLAWFREE_EQUALITY",
            TheoremId::CubicClawfreeSandwich => "CUBIC_CLAWFREE_SANDWICH",
            TheoremId::TrianglefreeAlpha => "TRIANGLEFREE_ALPHA",
            TheoremId::TrianglefreeUpper => "TRIANGLEFREE_UPPER",
            TheoremId::DeltastarLower => "DELTASTAR_LOWER",
            TheoremId::TreeCorollary => "TREE_COROLLARY",
            TheoremId::P1LowerAndGcal => "P1_LOWER_AND_GCAL",
            TheoremId::BipartiteUpper => "BIPARTITE_UPPER",
            TheoremId::NpIdentity => "NP_IDENTITY",
        }
    }

    /// Smallest order the sweep acceptance range uses for this theorem.
    pub fn min_order(self) -> usize {
        match self {
            TheoremId::T3ProductToid => 5,
            _ => 4,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

pub type Values = BTreeMap<&'static str, i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The applicability filter rejected the graph.
    Skipped,
    Pass,
    /// A bound is attained. `recognized` is the verdict of the matching
    /// characterization, or `None` when the statement has none.
    EqualityCase {
        values: Values,
        recognized: Option<bool>,
    },
    Fail {
        values: Values,
        reason: String,
    },
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }
}

/// Lazily computed per-graph data shared by all theorems.
pub struct Facts<'a> {
    g: &'a Graph,
    complement: OnceCell<Graph>,
    values: [[OnceCell<Option<usize>>; 7]; 2],
    g6: OnceCell<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    G,
    Complement,
}

impl<'a> Facts<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Facts {
            g,
            complement: OnceCell::new(),
            values: Default::default(),
            g6: OnceCell::new(),
        }
    }

    fn complement(&self) -> &Graph {
        self.complement.get_or_init(|| self.g.complement())
    }

    fn graph(&self, side: Side) -> &Graph {
        match side {
            Side::G => self.g,
            Side::Complement => self.complement(),
        }
    }

    pub fn g6(&self) -> &str {
        self.g6.get_or_init(|| to_graph6(self.g))
    }

    fn param(&self, side: Side, kind: ParamKind, id: TheoremId) -> Result<usize, VerifierError> {
        let slot = &self.values[side as usize][kind as usize];
        slot.get_or_init(|| value(self.graph(side), kind))
            .ok_or_else(|| VerifierError::Undefined {
                theorem: id,
                param: kind.symbol(),
                g6: self.g6().to_string(),
            })
    }

    fn both_isolate_free(&self) -> bool {
        let n = self.g.order();
        n > 0
            && (0..n).all(|v| {
                let d = self.g.degree(v);
                d >= 1 && d + 1 < n
            })
    }
}

/// Combines one bound's equality status with its characterization.
fn characterize(values: &Values, equal: bool, recognized: bool, what: &str) -> Option<Outcome> {
    match (equal, recognized) {
        (true, true) => Some(Outcome::EqualityCase {
            values: values.clone(),
            recognized: Some(true),
        }),
        (true, false) => Some(Outcome::Fail {
            values: values.clone(),
            reason: format!("equality but not {what}"),
        }),
        (false, true) => Some(Outcome::Fail {
            values: values.clone(),
            reason: format!("{what} but no equality"),
        }),
        (false, false) => None,
    }
}

/// Folds per-bound verdicts: any failure wins, then any equality case.
fn combine(parts: impl IntoIterator<Item = Option<Outcome>>) -> Outcome {
    let mut out = Outcome::Pass;
    for part in parts.into_iter().flatten() {
        match part {
            Outcome::Fail { .. } => return part,
            Outcome::EqualityCase { .. } if out == Outcome::Pass => out = part,
            _ => {}
        }
    }
    out
}

fn fail(values: Values, reason: impl Into<String>) -> Outcome {
    Outcome::Fail {
        values,
        reason: reason.into(),
    }
}

fn uncharacterized(values: Values, equal: bool) -> Outcome {
    if equal {
        Outcome::EqualityCase {
            values,
            recognized: None,
        }
    } else {
        Outcome::Pass
    }
}

fn iso(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && are_isomorphic(g, h).expect("order checked against the cap")
}

fn iso_any(g: &Graph, hs: &[Graph]) -> bool {
    g.order() <= crate::graph::DEFAULT_ISO_CAP && hs.iter().any(|h| iso(g, h))
}

/// True when no component is a complete graph or an odd cycle, the setting
/// in which every component has an independent set of at least `n_i / Δ`.
fn brooks_components(g: &Graph) -> bool {
    g.components().into_iter().all(|c| {
        let h = g.induced(c);
        !h.is_complete() && !h.is_odd_cycle()
    })
}

pub fn check_theorem(id: TheoremId, g: &Graph) -> Result<Outcome, VerifierError> {
    check_with_facts(id, &Facts::new(g))
}

pub fn check_with_facts(id: TheoremId, f: &Facts<'_>) -> Result<Outcome, VerifierError> {
    use ParamKind::*;
    use Side::*;

    let g = f.g;
    let n = g.order();
    let ni = n as i64;
    let m = g.size() as i64;
    let p = |side, kind| f.param(side, kind, id).map(|v| v as i64);

    let outcome = match id {
        TheoremId::L1SumBounds => {
            if !f.both_isolate_free() {
                return Ok(Outcome::Skipped);
            }
            let (t, tc) = (p(G, Toid)?, p(Complement, Toid)?);
            let sum = t + tc;
            let values = Values::from([("n", ni), ("toid", t), ("toid_complement", tc), ("sum", sum)]);
            if sum < ni - 1 || sum > 2 * ni - 1 {
                return Ok(fail(values, "sum outside [n - 1, 2n - 1]"));
            }
            let upper_family = iso_any(g, &[named::cycle(4), named::matching(2)]);
            combine([
                characterize(&values, sum == ni - 1, in_phi(g), "in Φ"),
                characterize(&values, sum == 2 * ni - 1, upper_family, "C4 or 2P2"),
            ])
        }
        TheoremId::L2ToidNMinus1 => {
            if n < 2 || !g.is_connected() {
                return Ok(Outcome::Skipped);
            }
            let t = p(G, Toid)?;
            let values = Values::from([("n", ni), ("toid", t)]);
            let family = (n >= 3 && g.is_complete()) || iso_any(g, &[named::path(3), named::cycle(4), named::cycle(5)]);
            combine([characterize(&values, t == ni - 1, family, "P3, C4, C5 or complete")])
        }
        TheoremId::T3ProductToid => {
            if n < 5 || !f.both_isolate_free() {
                return Ok(Outcome::Skipped);
            }
            let (t, tc) = (p(G, Toid)?, p(Complement, Toid)?);
            let prod = t * tc;
            let values = Values::from([("n", ni), ("toid", t), ("toid_complement", tc), ("product", prod)]);
            if prod < 2 * ni - 6 || prod > (ni - 1) * (ni - 1) {
                return Ok(fail(values, "product outside [2n - 6, (n - 1)^2]"));
            }
            let lambda = in_lambda(g) || in_lambda(f.complement());
            combine([
                characterize(&values, prod == 2 * ni - 6, lambda, "in Λ (G or complement)"),
                characterize(
                    &values,
                    prod == (ni - 1) * (ni - 1),
                    iso_any(g, &[named::cycle(5)]),
                    "C5",
                ),
            ])
        }
        TheoremId::T4SumEqPhi => {
            if !f.both_isolate_free() {
                return Ok(Outcome::Skipped);
            }
            let (t, tc) = (p(G, Toid)?, p(Complement, Toid)?);
            let sum = t + tc;
            let values = Values::from([("n", ni), ("toid", t), ("toid_complement", tc), ("sum", sum)]);
            combine([characterize(&values, sum == ni - 1, in_phi(g), "in Φ")])
        }
        TheoremId::T5Product2oid => {
            if n < 4 {
                return Ok(Outcome::Skipped);
            }
            let (t, tc) = (p(G, TwoOid)?, p(Complement, TwoOid)?);
            let prod = t * tc;
            let values = Values::from([("n", ni), ("two_oid", t), ("two_oid_complement", tc), ("product", prod)]);
            if prod < 3 * ni - 12 || prod > ni * (ni - 1) {
                return Ok(fail(values, "product outside [3n - 12, n(n - 1)]"));
            }
            let psi = in_psi(g) || in_psi(f.complement());
            combine([
                characterize(&values, prod == 3 * ni - 12, psi, "in Ψ (G or complement)"),
                characterize(
                    &values,
                    prod == ni * (ni - 1),
                    g.is_complete() || g.is_edgeless(),
                    "K_n or its complement",
                ),
            ])
        }
        TheoremId::DoidSum2n => {
            if !f.both_isolate_free() {
                return Ok(Outcome::Skipped);
            }
            let (d, dc) = (p(G, Doid)?, p(Complement, Doid)?);
            let sum = d + dc;
            let values = Values::from([("n", ni), ("doid", d), ("doid_complement", dc), ("sum", sum)]);
            if sum > 2 * ni {
                return Ok(fail(values, "sum above 2n"));
            }
            combine([characterize(
                &values,
                sum == 2 * ni,
                iso_any(g, &[named::path(4)]),
                "P4",
            )])
        }
        TheoremId::DoidSum2nMinus1 => {
            if !f.both_isolate_free() || iso_any(g, &[named::path(4)]) {
                return Ok(Outcome::Skipped);
            }
            let (d, dc) = (p(G, Doid)?, p(Complement, Doid)?);
            let sum = d + dc;
            let values = Values::from([("n", ni), ("doid", d), ("doid_complement", dc), ("sum", sum)]);
            if sum > 2 * ni - 1 {
                return Ok(fail(values, "sum above 2n - 1"));
            }
            // Θ starts at five vertices; on four, C4 and 2P2 also reach 2n - 1.
            let theta = in_theta(g) || in_theta(f.complement()) || iso_any(g, &[named::cycle(4), named::matching(2)]);
            combine([characterize(
                &values,
                sum == 2 * ni - 1,
                theta,
                "in Θ (G or complement), C4 or 2P2",
            )])
        }
        TheoremId::DoidProductLower => {
            if !f.both_isolate_free() {
                return Ok(Outcome::Skipped);
            }
            let (d, dc) = (p(G, Doid)?, p(Complement, Doid)?);
            let prod = d * dc;
            let values = Values::from([("n", ni), ("doid", d), ("doid_complement", dc), ("product", prod)]);
            if prod < 3 * ni - 12 {
                return Ok(fail(values, "product below 3n - 12"));
            }
            let psi = in_psi(g) || in_psi(f.complement());
            combine([characterize(
                &values,
                prod == 3 * ni - 12,
                psi,
                "in Ψ (G or complement)",
            )])
        }
        TheoremId::TDeltaUpper => {
            if n == 0 || g.min_degree() < 2 || !brooks_components(g) {
                return Ok(Outcome::Skipped);
            }
            let t = p(G, TwoOid)?;
            let delta = g.max_degree() as i64;
            let values = Values::from([("n", ni), ("two_oid", t), ("max_degree", delta)]);
            if t * delta > (delta - 1) * ni {
                return Ok(fail(values, "above (Δ - 1)n/Δ"));
            }
            uncharacterized(values, t * delta == (delta - 1) * ni)
        }
        TheoremId::E8Identity => {
            if n == 0 || g.min_degree() < 2 {
                return Ok(Outcome::Skipped);
            }
            let (t, a) = (p(G, TwoOid)?, p(G, Alpha)?);
            let values = Values::from([("n", ni), ("two_oid", t), ("alpha", a)]);
            if t != ni - a {
                return Ok(fail(values, "two_oid differs from n - α"));
            }
            Outcome::Pass
        }
        TheoremId::ClawfreeLower => {
            if n == 0 || g.min_degree() < 1 || !g.is_claw_free() {
                return Ok(Outcome::Skipped);
            }
            let delta = g.min_degree() as i64;
            let (t, two, d) = (p(G, Toid)?, p(G, TwoOid)?, p(G, Doid)?);
            let values = Values::from([
                ("n", ni),
                ("min_degree", delta),
                ("toid", t),
                ("two_oid", two),
                ("doid", d),
            ]);
            let bound = delta * ni;
            if [t, two, d].iter().any(|&x| x * (delta + 2) < bound) {
                return Ok(fail(values, "below δn/(δ + 2)"));
            }
            uncharacterized(values, [t, two, d].iter().any(|&x| x * (delta + 2) == bound))
        }
        TheoremId::ClawfreeEquality => {
            if n == 0 || g.min_degree() < 3 || !g.is_claw_free() {
                return Ok(Outcome::Skipped);
            }
            let (t, two, d) = (p(G, Toid)?, p(G, TwoOid)?, p(G, Doid)?);
            let values = Values::from([("n", ni), ("toid", t), ("two_oid", two), ("doid", d)]);
            if t != two || two != d {
                return Ok(fail(values, "parameters differ"));
            }
            Outcome::Pass
        }
        TheoremId::CubicClawfreeSandwich => {
            let has_k4 = g.components().into_iter().any(|c| c.len() == 4);
            if n == 0 || !g.is_regular(3) || !g.is_claw_free() || has_k4 {
                return Ok(Outcome::Skipped);
            }
            let (t, two, d) = (p(G, Toid)?, p(G, TwoOid)?, p(G, Doid)?);
            let values = Values::from([("n", ni), ("toid", t), ("two_oid", two), ("doid", d)]);
            if t != two || two != d {
                return Ok(fail(values, "parameters differ"));
            }
            if 5 * two < 3 * ni || 3 * two > 2 * ni {
                return Ok(fail(values, "outside [3n/5, 2n/3]"));
            }
            uncharacterized(values, 5 * two == 3 * ni || 3 * two == 2 * ni)
        }
        TheoremId::TrianglefreeAlpha => {
            if n == 0 || !g.is_triangle_free() {
                return Ok(Outcome::Skipped);
            }
            let a = p(G, Alpha)?;
            let delta = g.max_degree() as i64;
            let values = Values::from([("n", ni), ("alpha", a), ("max_degree", delta)]);
            if a * (3 + delta) < 2 * ni {
                return Ok(fail(values, "α below 2n/(3 + Δ)"));
            }
            uncharacterized(values, a * (3 + delta) == 2 * ni)
        }
        TheoremId::TrianglefreeUpper => {
            if n == 0 || g.min_degree() < 2 || !g.is_triangle_free() {
                return Ok(Outcome::Skipped);
            }
            let t = p(G, TwoOid)?;
            let delta = g.max_degree() as i64;
            let values = Values::from([("n", ni), ("two_oid", t), ("max_degree", delta)]);
            if t * (delta + 3) > (delta + 1) * ni {
                return Ok(fail(values, "above (Δ + 1)n/(Δ + 3)"));
            }
            uncharacterized(values, t * (delta + 3) == (delta + 1) * ni)
        }
        TheoremId::DeltastarLower => {
            if n == 0 || g.has_isolated_vertex() {
                return Ok(Outcome::Skipped);
            }
            let d = p(G, Doid)?;
            let prof = g.degree_profile();
            let ds = prof.delta_star as i64;
            let (l, s) = (prof.leaves.len() as i64, prof.supports.len() as i64);
            let rhs = 2 * ds * ni - 2 * m + l - s;
            let values = Values::from([
                ("n", ni),
                ("m", m),
                ("leaves", l),
                ("supports", s),
                ("delta_star", ds),
                ("doid", d),
            ]);
            if d * (2 * ds - 1) < rhs {
                return Ok(fail(values, "below the δ* bound"));
            }
            let omega = in_omega(g).map_err(|e| VerifierError::Recognizer(e.to_string()))?;
            combine([characterize(&values, d * (2 * ds - 1) == rhs, omega, "in Ω")])
        }
        TheoremId::TreeCorollary => {
            if n < 2 || !g.is_tree() {
                return Ok(Outcome::Skipped);
            }
            let d = p(G, Doid)?;
            let prof = g.degree_profile();
            let (l, s) = (prof.leaves.len() as i64, prof.supports.len() as i64);
            let values = Values::from([("n", ni), ("leaves", l), ("supports", s), ("doid", d)]);
            if 3 * d < 2 * ni + l - s + 2 {
                return Ok(fail(values, "below (2n + ℓ - s + 2)/3"));
            }
            uncharacterized(values, 3 * d == 2 * ni + l - s + 2)
        }
        TheoremId::P1LowerAndGcal => {
            // Edgeless graphs meet the bound but are not in 𝒢.
            if m == 0 {
                return Ok(Outcome::Skipped);
            }
            let t = p(G, TwoOid)?;
            let values = Values::from([("n", ni), ("m", m), ("two_oid", t)]);
            if 2 * t < 2 * ni - m {
                return Ok(fail(values, "below n - m/2"));
            }
            combine([characterize(&values, 2 * t == 2 * ni - m, in_gcal(g), "in 𝒢")])
        }
        TheoremId::BipartiteUpper => {
            if n == 0 || g.min_degree() < 2 || !g.is_bipartite() {
                return Ok(Outcome::Skipped);
            }
            let (t, d, gt) = (p(G, Toid)?, p(G, Doid)?, p(G, GammaT)?);
            let values = Values::from([("n", ni), ("toid", t), ("doid", d), ("gamma_t", gt)]);
            if t != d {
                return Ok(fail(values, "toid differs from doid"));
            }
            if 2 * t > ni + gt {
                return Ok(fail(values, "above (n + γ_t)/2"));
            }
            uncharacterized(values, 2 * t == ni + gt)
        }
        TheoremId::NpIdentity => {
            if n == 0 || g.has_isolated_vertex() {
                return Ok(Outcome::Skipped);
            }
            let a = p(G, Alpha)?;
            let two = value(&reduce(g, ReductionKind::TwoOidGadget)?, TwoOid).expect("gadgets are isolate-free") as i64;
            let d = value(&reduce(g, ReductionKind::DoidGadget)?, Doid).expect("gadgets are isolate-free") as i64;
            let values = Values::from([("n", ni), ("alpha", a), ("two_oid_gadget", two), ("doid_gadget", d)]);
            if two != 3 * ni - a || d != 3 * ni - a {
                return Ok(fail(values, "gadget value differs from 3n - α"));
            }
            Outcome::Pass
        }
    };
    Ok(outcome)
}
