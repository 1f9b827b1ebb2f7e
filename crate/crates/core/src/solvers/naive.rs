//! Exhaustive reference solver: tries subsets by size, each size in
//! lexicographic order, and keeps the first valid one.

use super::{check_set, is_defined, ParamKind, ParamResult, SolverError};
use crate::graph::{Graph, VertexSet};

/// Default order limit for [`solve_naive`].
pub const NAIVE_GUARD: usize = 20;

pub fn solve_naive(g: &Graph, kind: ParamKind) -> Result<ParamResult, SolverError> {
    solve_naive_with_guard(g, kind, NAIVE_GUARD)
}

pub fn solve_naive_with_guard(g: &Graph, kind: ParamKind, guard: usize) -> Result<ParamResult, SolverError> {
    let n = g.order();
    if n > guard {
        return Err(SolverError::GuardExceeded { n, guard });
    }
    if !is_defined(g, kind) {
        return Ok(ParamResult::Undefined);
    }
    let sizes: Box<dyn Iterator<Item = usize>> = if kind.is_maximum() {
        Box::new((0..=n).rev())
    } else {
        Box::new(0..=n)
    };
    for k in sizes {
        if let Some(s) = Combinations::new(n, k).find(|&s| check_set(g, s, kind)) {
            return Ok(ParamResult::Defined {
                value: k,
                certificate: s,
            });
        }
    }
    unreachable!("a defined parameter always has a valid set")
}

/// `k`-subsets of `0..n` in lexicographic order of their sorted lists.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().copied().collect();
        let k = self.idx.len();
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn combinations_in_order() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).map(|s| s.to_vec()).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn naive_examples() {
        assert_eq!(solve_naive(&cycle(4), ParamKind::Doid).unwrap().value(), Some(3));
        assert_eq!(solve_naive(&cycle(6), ParamKind::Toid).unwrap().value(), Some(4));
        assert_eq!(solve_naive(&complete(3), ParamKind::Alpha).unwrap().value(), Some(1));
        assert_eq!(
            solve_naive(&cycle(21), ParamKind::Toid),
            Err(SolverError::GuardExceeded { n: 21, guard: 20 })
        );
    }
}
