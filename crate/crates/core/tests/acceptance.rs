//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero only when a criterion fails that is not listed in `EXPECTED_RED`.

use std::time::{Duration, Instant};

use oidom::families::{generate, FamilySpec, Fixture};
use oidom::graph::are_isomorphic;
use oidom::graph::named::{complete, cycle, matching, star};
use oidom::reductions::{verify_reduction, ReductionKind};
use oidom::solvers::{solve, solve_naive, value, ParamKind};
use oidom::verifier::{labeled_graphs, sweep, Source, SweepOptions, SweepReport, TheoremId};
use oidom::Graph;

const CYCLE_LIMIT: Duration = Duration::from_secs(1);
const ORACLE_LIMIT: Duration = Duration::from_secs(120);
const SWEEP_LIMIT: Duration = Duration::from_secs(15 * 60);
const REDUCTION_LIMIT: Duration = Duration::from_secs(10 * 60);
const SWEEP_JOBS: usize = 8;

/// Criteria that fail for a documented reason. Each entry names the
/// criterion and why it cannot pass as written.
const EXPECTED_RED: &[(&str, &str)] = &[(
    "7",
    "the ladder P_3k x P_2 is bipartite with alpha = 3k, so its 2-outer-independent value is \
     n - alpha = 3k, not 4k; the value 4k belongs to the total and double variants (line 7b)",
)];

struct Report {
    lines: Vec<(String, bool)>,
}

impl Report {
    fn record(&mut self, id: &str, name: &str, pass: bool, detail: String, took: Duration) {
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("{tag} [{id}] {name}: {detail} ({:.2?})", took);
        if !pass {
            if let Some((_, why)) = EXPECTED_RED.iter().find(|(k, _)| *k == id) {
                println!("     expected red: {why}");
            }
        }
        self.lines.push((id.to_string(), pass));
    }
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

fn cycles() -> (bool, String) {
    let mut bad = Vec::new();
    for n in 3..=12 {
        let g = cycle(n);
        let t = value(&g, ParamKind::Toid);
        let two = value(&g, ParamKind::TwoOid);
        if t != Some(ceil_div(2 * n, 3)) || two != Some(ceil_div(n, 2)) {
            bad.push(format!("C{n}: toid {t:?}, 2oid {two:?}"));
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            "n = 3..12 exact".into()
        } else {
            bad.join("; ")
        },
    )
}

fn stars() -> (bool, String) {
    let mut bad = Vec::new();
    for n in 4..=8 {
        let g = star(n - 1);
        let t = value(&g, ParamKind::Toid);
        let two = value(&g, ParamKind::TwoOid);
        if t != Some(2) || two != Some(n - 1) {
            bad.push(format!("K1,{}: toid {t:?}, 2oid {two:?}", n - 1));
        }
    }
    (
        bad.is_empty(),
        if bad.is_empty() {
            "n = 4..8 exact".into()
        } else {
            bad.join("; ")
        },
    )
}

fn oracle() -> (bool, String) {
    let kinds = [ParamKind::Toid, ParamKind::TwoOid, ParamKind::Doid, ParamKind::Alpha];
    let mut graphs = 0u64;
    let mut mismatches = Vec::new();
    for n in 0..=6 {
        for g in labeled_graphs(n) {
            graphs += 1;
            for kind in kinds {
                if solve(&g, kind) != solve_naive(&g, kind).expect("within the naive guard") {
                    mismatches.push(format!("{kind} on {}", oidom::graph::to_graph6(&g)));
                }
            }
        }
    }
    let ok = mismatches.is_empty();
    (
        ok,
        format!(
            "{graphs} labeled graphs, {} mismatches {}",
            mismatches.len(),
            mismatches.iter().take(3).cloned().collect::<Vec<_>>().join(", ")
        ),
    )
}

fn sweep_run(jobs: usize) -> SweepReport {
    let opts = SweepOptions {
        orders: 4..=7,
        theorems: TheoremId::ALL.to_vec(),
        source: Source::labeled(),
        jobs,
        timing: false,
    };
    sweep(&opts).expect("sweep runs")
}

fn sweep_verdict(r: &SweepReport) -> (bool, String) {
    let red: Vec<String> = r
        .theorems
        .iter()
        .filter(|t| !t.passed())
        .map(|t| {
            format!(
                "{} ({} violations, first {:?})",
                t.id,
                t.violations_total,
                t.violations.first()
            )
        })
        .collect();
    let checked = r.theorems.first().map_or(0, |t| t.checked);
    let eq: u64 = r.theorems.iter().map(|t| t.equality_total).sum();
    if red.is_empty() {
        (
            true,
            format!(
                "{} theorems x {checked} graphs, 0 violations, {eq} equality cases cross-checked",
                r.theorems.len()
            ),
        )
    } else {
        (false, red.join("; "))
    }
}

fn fixtures() -> (bool, String) {
    let mut bad = Vec::new();
    for (f, n, expected) in [(Fixture::H1, 12, 8), (Fixture::H2, 10, 6)] {
        let g = f.graph();
        let v = value(&g, ParamKind::TwoOid);
        if g.order() != n || !g.is_regular(3) || !g.is_claw_free() || v != Some(expected) {
            bad.push(format!("{f}: n {}, 2oid {v:?}", g.order()));
        }
    }
    let psi = Fixture::PsiFig1.graph();
    let prod = value(&psi, ParamKind::TwoOid)
        .zip(value(&psi.complement(), ParamKind::TwoOid))
        .map(|(a, b)| a * b);
    if prod != Some(18) {
        bad.push(format!("PSI_FIG1 product {prod:?}"));
    }
    let om = Fixture::OmegaFig3.graph();
    let p = om.degree_profile();
    let ds = p.delta_star;
    let bound_num = 2 * ds * om.order() + p.leaves.len() - 2 * om.size() - p.supports.len();
    let d = value(&om, ParamKind::Doid);
    if d != Some(11) || d.map(|d| d * (2 * ds - 1)) != Some(bound_num) {
        bad.push(format!(
            "OMEGA_FIG3 doid {d:?}, bound numerator {bound_num}, delta* {ds}"
        ));
    }
    let ok = bad.is_empty();
    (
        ok,
        if ok {
            "H1 = 8, H2 = 6, Ψ product 18, Ω doid 11 at the δ* bound".into()
        } else {
            bad.join("; ")
        },
    )
}

fn reductions() -> (bool, String) {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 2..=5 {
        for g in labeled_graphs(n).filter(Graph::is_connected) {
            for kind in [ReductionKind::TwoOidGadget, ReductionKind::DoidGadget] {
                count += 1;
                let r = verify_reduction(&g, kind).expect("connected graphs reduce");
                if !r.identity_holds() {
                    bad.push(format!("{kind} on {}: {r:?}", oidom::graph::to_graph6(&g)));
                }
            }
        }
    }
    (
        bad.is_empty(),
        format!(
            "{count} gadget checks, {} failures {}",
            bad.len(),
            bad.iter().take(2).cloned().collect::<Vec<_>>().join("; ")
        ),
    )
}

fn grid_values(k: usize) -> Graph {
    generate(&FamilySpec::Grid { k }).expect("grid")
}

fn grid_literal() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for k in 1..=3 {
        let g = grid_values(k);
        let two = value(&g, ParamKind::TwoOid);
        let gt = value(&g, ParamKind::GammaT);
        ok &= two == Some(4 * k) && gt == Some(2 * k);
        parts.push(format!(
            "k={k}: 2oid {two:?} (want {}), gamma_t {gt:?} (want {})",
            4 * k,
            2 * k
        ));
    }
    (ok, parts.join("; "))
}

fn grid_sharpness() -> (bool, String) {
    let mut parts = Vec::new();
    let mut ok = true;
    for k in 1..=3 {
        let g = grid_values(k);
        let (t, d, gt) = (
            value(&g, ParamKind::Toid),
            value(&g, ParamKind::Doid),
            value(&g, ParamKind::GammaT),
        );
        ok &= t == Some(4 * k) && d == Some(4 * k) && gt == Some(2 * k);
        parts.push(format!("k={k}: toid {t:?}, doid {d:?}, gamma_t {gt:?}"));
    }
    (ok, parts.join("; "))
}

fn census() -> (bool, String) {
    let (c4, p2) = (cycle(4), matching(2));
    let mut products = std::collections::BTreeMap::new();
    let mut bad = Vec::new();
    for g in labeled_graphs(4) {
        let gc = g.complement();
        if g.has_isolated_vertex() || gc.has_isolated_vertex() {
            continue;
        }
        let prod = value(&g, ParamKind::Toid).unwrap() * value(&gc, ParamKind::Toid).unwrap();
        *products.entry(prod).or_insert(0) += 1;
        let is_pair = are_isomorphic(&g, &c4).unwrap() || are_isomorphic(&g, &p2).unwrap();
        if (prod == 12) != is_pair || !(prod == 4 || prod == 12) {
            bad.push(format!("{} product {prod}", oidom::graph::to_graph6(&g)));
        }
    }
    let ok = bad.is_empty() && products.keys().copied().collect::<Vec<_>>() == vec![4, 12];
    (ok, format!("products {products:?}; {} mismatches", bad.len()))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn main() {
    // Sanity: the K_n upper end used by several criteria is in reach.
    assert_eq!(value(&complete(4), ParamKind::TwoOid), Some(3));

    let mut report = Report { lines: Vec::new() };

    let ((ok, d), t) = timed(cycles);
    report.record("1", "cycle formulas", ok && t < CYCLE_LIMIT, d, t);

    let ((ok, d), t) = timed(stars);
    report.record("2", "star values", ok, d, t);

    let ((ok, d), t) = timed(oracle);
    report.record("3", "oracle equivalence, n <= 6", ok && t < ORACLE_LIMIT, d, t);

    let (first, t) = timed(|| sweep_run(SWEEP_JOBS));
    let (ok, d) = sweep_verdict(&first);
    report.record(
        "4",
        "exhaustive sweep, labeled orders 4..7",
        ok && t < SWEEP_LIMIT,
        d,
        t,
    );

    let ((ok, d), t) = timed(fixtures);
    report.record("5", "fixtures", ok, d, t);

    let ((ok, d), t) = timed(reductions);
    report.record(
        "6",
        "reduction identity, connected n = 2..5",
        ok && t < REDUCTION_LIMIT,
        d,
        t,
    );

    let ((ok, d), t) = timed(grid_literal);
    report.record("7", "grid: 2oid = 4k and gamma_t = 2k", ok, d, t);
    let ((ok, d), t) = timed(grid_sharpness);
    report.record("7b", "grid: toid = doid = 4k and gamma_t = 2k", ok, d, t);

    let ((ok, d), t) = timed(census);
    report.record("8", "n = 4 product census", ok, d, t);

    let (second, t) = timed(|| sweep_run(1));
    let same = first.to_json() == second.to_json();
    let detail = format!(
        "jobs {SWEEP_JOBS} vs 1: {} bytes, identical = {same}",
        first.to_json().len()
    );
    report.record("9", "determinism", same, detail, t);

    let unexpected: Vec<&str> = report
        .lines
        .iter()
        .filter(|(id, pass)| !pass && !EXPECTED_RED.iter().any(|(k, _)| k == id))
        .map(|(id, _)| id.as_str())
        .collect();
    let expected_red = report.lines.iter().filter(|(_, pass)| !pass).count() - unexpected.len();
    println!(
        "summary: {} pass, {} expected red, {} unexpected failures",
        report.lines.iter().filter(|(_, p)| *p).count(),
        expected_red,
        unexpected.len()
    );
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
