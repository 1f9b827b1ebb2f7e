//! Index-order branch and bound over the dominating set itself, for γ, γ_t
//! and γ_×2.

use super::SolverError;

pub(crate) struct DominationProblem<'a> {
    adj: &'a [u64],
    /// Use `N[v]` instead of `N(v)`.
    closed: bool,
    /// Required size of `N[v] ∩ S` (or `N(v) ∩ S`); for γ only vertices
    /// outside `S` need it, which is the same as `|N[v] ∩ S| >= 1`.
    need: u32,
    n: usize,
    /// Largest number of vertices a single added vertex can serve.
    reach: u32,
}

struct State {
    best: u64,
    best_len: u32,
    nodes: u64,
    limit: u64,
}

impl<'a> DominationProblem<'a> {
    pub(crate) fn new(adj: &'a [u64], closed: bool, need: u32) -> Self {
        let n = adj.len();
        let reach = adj.iter().map(|a| a.count_ones()).max().unwrap_or(0) + closed as u32;
        DominationProblem {
            adj,
            closed,
            need,
            n,
            reach,
        }
    }

    #[inline]
    fn dom(&self, u: usize) -> u64 {
        self.adj[u] | (self.closed as u64) << u
    }

    /// The lexicographically smallest minimum set, as a bitmask.
    pub(crate) fn solve(&self, limit: u64) -> Result<u64, SolverError> {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        // The whole vertex set always works once the parameter is defined.
        let mut state = State {
            best: all,
            best_len: self.n as u32 + 1,
            nodes: 0,
            limit,
        };
        self.search(0, 0, &mut state)?;
        Ok(state.best)
    }

    fn search(&self, i: usize, set: u64, st: &mut State) -> Result<(), SolverError> {
        st.nodes += 1;
        if st.nodes > st.limit {
            return Err(SolverError::BudgetExhausted(st.limit));
        }
        let size = set.count_ones();
        if size >= st.best_len {
            return Ok(());
        }
        let open = if i >= 64 { 0 } else { !0u64 << i };
        let mut deficit = 0;
        for u in 0..self.n {
            let d = self.dom(u);
            let have = (d & set).count_ones();
            if have < self.need {
                if have + (d & open).count_ones() < self.need {
                    return Ok(());
                }
                deficit += self.need - have;
            }
        }
        if deficit == 0 {
            st.best = set;
            st.best_len = size;
            return Ok(());
        }
        if i == self.n || size + deficit.div_ceil(self.reach) >= st.best_len {
            return Ok(());
        }
        self.search(i + 1, set | 1 << i, st)?;
        self.search(i + 1, set, st)
    }
}
