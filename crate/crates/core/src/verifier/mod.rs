//! Exhaustive checking of the registered bounds over small graphs.

mod theorems;

pub use theorems::{check_theorem, check_with_facts, Facts, Outcome, TheoremId, Values};

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{canonical_form, read_graphs, CanonicalForm, Graph, GraphError};
use crate::reductions::ReductionError;

/// Largest order enumerated without an explicit override.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Largest order enumerated at all.
pub const HARD_MAX_ORDER: usize = 8;
/// Stored examples per list in a report.
pub const LIST_CAP: usize = 100;

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error("order {n} exceeds the enumeration limit {cap}{hint}")]
    OrderCap { n: usize, cap: usize, hint: &'static str },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}, line {line}: {source}")]
    File {
        path: String,
        line: usize,
        source: GraphError,
    },
    #[error("FILE mode needs a source path")]
    MissingSource,
    #[error("internal consistency error: {param} undefined on {g6} which passed the {theorem} filter")]
    Undefined {
        theorem: TheoremId,
        param: &'static str,
        g6: String,
    },
    #[error("recognizer failed: {0}")]
    Recognizer(String),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EnumerationMode {
    Labeled,
    Canonical,
    File,
}

impl FromStr for EnumerationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "labeled" => Ok(EnumerationMode::Labeled),
            "canonical" => Ok(EnumerationMode::Canonical),
            "file" => Ok(EnumerationMode::File),
            _ => Err(format!("unknown mode `{s}` (expected labeled, canonical or file)")),
        }
    }
}

impl fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumerationMode::Labeled => "labeled",
            EnumerationMode::Canonical => "canonical",
            EnumerationMode::File => "file",
        })
    }
}

/// Where the graphs of a sweep come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Source {
    pub mode: EnumerationMode,
    /// Graph6 file for FILE mode.
    pub path: Option<PathBuf>,
    /// Ceiling on the order; raised to 8 only on request.
    pub max_order: usize,
}

impl Source {
    pub fn labeled() -> Self {
        Source {
            mode: EnumerationMode::Labeled,
            path: None,
            max_order: DEFAULT_MAX_ORDER,
        }
    }

    pub fn canonical() -> Self {
        Source {
            mode: EnumerationMode::Canonical,
            ..Source::labeled()
        }
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        Source {
            mode: EnumerationMode::File,
            path: Some(path.into()),
            ..Source::labeled()
        }
    }

    fn check_order(&self, n: usize) -> Result<(), VerifierError> {
        let cap = self.max_order.min(HARD_MAX_ORDER);
        if n > cap {
            let hint = if n <= HARD_MAX_ORDER {
                " (order 8 needs an explicit override)"
            } else {
                ""
            };
            return Err(VerifierError::OrderCap { n, cap, hint });
        }
        Ok(())
    }
}

fn edge_slots(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Every labeled graph on `n` vertices, in edge-mask order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0..1u64 << edge_slots(n)).map(move |mask| Graph::from_edge_mask(n, mask))
}

/// One representative per isomorphism class on `n` vertices, in canonical
/// code order. Built by extending the classes on `n - 1` vertices with a new
/// vertex in every possible way.
pub fn canonical_graphs(n: usize) -> Vec<Graph> {
    let mut classes: Vec<CanonicalForm> = vec![canonical_form(&Graph::empty(0).expect("empty graph")).expect("small")];
    for k in 1..=n {
        let mut seen = HashSet::new();
        for base in &classes {
            let g = base.to_graph();
            for nb in 0..1u64 << (k - 1) {
                let mut adj = g.adjacency().to_vec();
                for (v, row) in adj.iter_mut().enumerate() {
                    *row |= (nb >> v & 1) << (k - 1);
                }
                adj.push(nb);
                let h = Graph::from_adjacency(adj).expect("valid extension");
                seen.insert(canonical_form(&h).expect("within the code cap"));
            }
        }
        classes = seen.into_iter().collect();
        classes.sort();
    }
    classes.iter().map(CanonicalForm::to_graph).collect()
}

/// The graphs of order `n` from `source`. FILE mode ignores `n` and yields
/// the whole file in order.
pub fn enumerate_graphs(n: usize, source: &Source) -> Result<Vec<Graph>, VerifierError> {
    match source.mode {
        EnumerationMode::Labeled => {
            source.check_order(n)?;
            Ok(labeled_graphs(n).collect())
        }
        EnumerationMode::Canonical => {
            source.check_order(n)?;
            Ok(canonical_graphs(n))
        }
        EnumerationMode::File => read_file(source),
    }
}

fn read_file(source: &Source) -> Result<Vec<Graph>, VerifierError> {
    let path = source.path.as_ref().ok_or(VerifierError::MissingSource)?;
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| VerifierError::Io {
        path: shown.clone(),
        source: e,
    })?;
    read_graphs(&text).map_err(|(line, e)| VerifierError::File {
        path: shown,
        line,
        source: e,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityRecord {
    pub g6: String,
    pub values: Values,
    pub recognized: Option<bool>,
}

/// A capped list holding the `LIST_CAP` smallest entries by graph6 string.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
struct Smallest<T> {
    items: Vec<(String, T)>,
}

impl<T: Ord + Clone> Smallest<T> {
    fn push(&mut self, key: String, item: T) {
        let entry = (key, item);
        if self.items.len() == LIST_CAP && entry >= *self.items.last().expect("full list") {
            return;
        }
        let at = self.items.binary_search(&entry).unwrap_or_else(|i| i);
        self.items.insert(at, entry);
        self.items.truncate(LIST_CAP);
    }

    fn merge(mut self, other: Self) -> Self {
        for (k, v) in other.items {
            self.push(k, v);
        }
        self
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    checked: u64,
    skipped: u64,
    violations_total: u64,
    equality_total: u64,
    violations: Smallest<String>,
    equality: Smallest<EqualityEntry>,
}

/// Solver values and recognizer verdict of one equality case.
type EqualityEntry = (Vec<(&'static str, i64)>, Option<bool>);

impl Tally {
    fn record(&mut self, g6: &str, outcome: Outcome) {
        self.checked += 1;
        match outcome {
            Outcome::Skipped => self.skipped += 1,
            Outcome::Pass => {}
            Outcome::EqualityCase { values, recognized } => {
                self.equality_total += 1;
                self.equality
                    .push(g6.to_string(), (values.into_iter().collect(), recognized));
            }
            Outcome::Fail { reason, .. } => {
                self.violations_total += 1;
                self.violations.push(g6.to_string(), reason);
            }
        }
    }

    fn merge(self, other: Tally) -> Tally {
        Tally {
            checked: self.checked + other.checked,
            skipped: self.skipped + other.skipped,
            violations_total: self.violations_total + other.violations_total,
            equality_total: self.equality_total + other.equality_total,
            violations: self.violations.merge(other.violations),
            equality: self.equality.merge(other.equality),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: TheoremId,
    pub checked: u64,
    pub applicable: u64,
    pub skipped: u64,
    pub violations: Vec<String>,
    pub violations_total: u64,
    pub equality_cases: Vec<EqualityRecord>,
    pub equality_total: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportMeta {
    pub orders: Vec<usize>,
    pub mode: EnumerationMode,
    /// Only filled in when timing is requested, so that reports stay
    /// byte-identical across runs by default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub meta: ReportMeta,
    pub theorems: Vec<TheoremReport>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.theorems.iter().all(TheoremReport::passed)
    }

    pub fn theorem(&self, id: TheoremId) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub orders: std::ops::RangeInclusive<usize>,
    pub theorems: Vec<TheoremId>,
    pub source: Source,
    pub jobs: usize,
    pub timing: bool,
}

type Tallies = Vec<Tally>;

fn check_graph(ids: &[TheoremId], g: &Graph, mut acc: Tallies) -> Result<Tallies, VerifierError> {
    let facts = Facts::new(g);
    for (tally, &id) in acc.iter_mut().zip(ids) {
        let outcome = check_with_facts(id, &facts)?;
        tally.record(facts.g6(), outcome);
    }
    Ok(acc)
}

fn merge_all(a: Tallies, b: Tallies) -> Tallies {
    a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
}

/// Checks every theorem in `opts.theorems` on every graph of every order in
/// `opts.orders` (or every graph of the file in FILE mode). The report does
/// not depend on `jobs`.
pub fn sweep(opts: &SweepOptions) -> Result<SweepReport, VerifierError> {
    let start = Instant::now();
    let mut ids = opts.theorems.clone();
    ids.sort();
    ids.dedup();
    let empty = || vec![Tally::default(); ids.len()];

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| VerifierError::Pool(e.to_string()))?;

    let mut total = empty();
    let mut orders = Vec::new();
    match opts.source.mode {
        EnumerationMode::Labeled => {
            for n in opts.orders.clone() {
                opts.source.check_order(n)?;
            }
            for n in opts.orders.clone() {
                orders.push(n);
                let part = pool.install(|| {
                    (0..1u64 << edge_slots(n))
                        .into_par_iter()
                        .try_fold(empty, |acc, mask| {
                            check_graph(&ids, &Graph::from_edge_mask(n, mask), acc)
                        })
                        .try_reduce(empty, |a, b| Ok(merge_all(a, b)))
                })?;
                total = merge_all(total, part);
            }
        }
        EnumerationMode::Canonical | EnumerationMode::File => {
            let graphs: Vec<Graph> = if opts.source.mode == EnumerationMode::File {
                let gs = read_file(&opts.source)?;
                let mut seen: Vec<usize> = gs.iter().map(Graph::order).collect();
                seen.sort_unstable();
                seen.dedup();
                orders = seen;
                gs
            } else {
                let mut gs = Vec::new();
                for n in opts.orders.clone() {
                    gs.extend(enumerate_graphs(n, &opts.source)?);
                    orders.push(n);
                }
                gs
            };
            let part = pool.install(|| {
                graphs
                    .par_iter()
                    .try_fold(empty, |acc, g| check_graph(&ids, g, acc))
                    .try_reduce(empty, |a, b| Ok(merge_all(a, b)))
            })?;
            total = merge_all(total, part);
        }
    }

    let theorems = ids
        .iter()
        .zip(total)
        .map(|(&id, t)| TheoremReport {
            id,
            checked: t.checked,
            applicable: t.checked - t.skipped,
            skipped: t.skipped,
            violations: t.violations.items.into_iter().map(|(g6, _)| g6).collect(),
            violations_total: t.violations_total,
            equality_cases: t
                .equality
                .items
                .into_iter()
                .map(|(g6, (values, recognized))| EqualityRecord {
                    g6,
                    values: values.into_iter().collect::<BTreeMap<_, _>>(),
                    recognized,
                })
                .collect(),
            equality_total: t.equality_total,
        })
        .collect();

    Ok(SweepReport {
        meta: ReportMeta {
            orders,
            mode: opts.source.mode,
            wall_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
        },
        theorems,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(labeled_graphs(4).count(), 64);
        assert_eq!(labeled_graphs(0).count(), 1);
        let counts: Vec<usize> = (0..=6).map(|n| canonical_graphs(n).len()).collect();
        // Numbers of graphs on n unlabeled vertices.
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn order_caps() {
        assert!(matches!(
            enumerate_graphs(8, &Source::labeled()),
            Err(VerifierError::OrderCap { n: 8, cap: 7, .. })
        ));
        assert!(matches!(
            enumerate_graphs(
                9,
                &Source {
                    max_order: 9,
                    ..Source::labeled()
                }
            ),
            Err(VerifierError::OrderCap { cap: 8, .. })
        ));
    }

    #[test]
    fn smallest_keeps_order_and_cap() {
        let mut a = Smallest::default();
        for i in (0..250).rev() {
            a.push(format!("{i:03}"), ());
        }
        assert_eq!(a.items.len(), LIST_CAP);
        assert_eq!(a.items[0].0, "000");
        assert_eq!(a.items[99].0, "099");
    }

    #[test]
    fn l1_at_order_four() {
        let opts = SweepOptions {
            orders: 4..=4,
            theorems: vec![TheoremId::L1SumBounds],
            source: Source::labeled(),
            jobs: 1,
            timing: false,
        };
        let r = sweep(&opts).unwrap();
        let t = &r.theorems[0];
        assert_eq!(t.checked, 64);
        assert_eq!(t.violations_total, 0);
        // Three labeled C4s and three labeled 2P2s meet the upper bound; the
        // twelve labeled P4s give sum 4 = n, strictly inside.
        assert_eq!(t.applicable, 18);
        assert_eq!(t.equality_total, 6);
        assert!(t.equality_cases.iter().all(|e| e.recognized == Some(true)));
    }
}
