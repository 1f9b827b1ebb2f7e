//! Branch and bound for the largest admissible independent set `I`.

use super::SolverError;

#[inline]
fn lowest(bits: u64) -> u64 {
    bits & bits.wrapping_neg()
}

/// Greedy clique cover of `p`: an upper bound on the independence number of
/// the induced subgraph.
#[inline]
fn clique_cover(adj: &[u64], mut p: u64) -> usize {
    let mut k = 0;
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        p &= p - 1;
        let mut q = p & adj[v];
        while q != 0 {
            let w = q.trailing_zeros() as usize;
            p &= !(1 << w);
            q &= adj[w] & !(1 << w);
        }
        k += 1;
    }
    k
}

pub(crate) struct ComplementProblem<'a> {
    adj: &'a [u64],
    /// Vertices with the degree required to sit in `I`.
    eligible: u64,
    /// Every vertex outside `I` must keep a neighbor outside `I`.
    keep_outside_neighbor: bool,
}

struct Budget {
    nodes: u64,
    limit: u64,
}

impl Budget {
    #[inline]
    fn tick(&mut self) -> Result<(), SolverError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            Err(SolverError::BudgetExhausted(self.limit))
        } else {
            Ok(())
        }
    }
}

impl<'a> ComplementProblem<'a> {
    pub(crate) fn new(adj: &'a [u64], eligible: u64, keep_outside_neighbor: bool) -> Self {
        ComplementProblem {
            adj,
            eligible,
            keep_outside_neighbor,
        }
    }

    /// Can `v` join `set` without stripping some vertex outside the set of its
    /// last outside neighbor?
    #[inline]
    fn can_add(&self, set: u64, v: usize) -> bool {
        if !self.keep_outside_neighbor {
            return true;
        }
        let inner = set | 1 << v;
        let mut nb = self.adj[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if self.adj[u] & !inner == 0 {
                return false;
            }
        }
        true
    }

    #[inline]
    fn bound(&self, cand: u64) -> usize {
        clique_cover(self.adj, cand)
    }

    pub(crate) fn max_size(&self, limit: u64) -> Result<usize, SolverError> {
        let mut best = 0;
        let mut budget = Budget { nodes: 0, limit };
        self.maximize(0, 0, self.eligible, &mut best, &mut budget)?;
        Ok(best)
    }

    fn maximize(
        &self,
        set: u64,
        size: usize,
        cand: u64,
        best: &mut usize,
        budget: &mut Budget,
    ) -> Result<(), SolverError> {
        budget.tick()?;
        if cand == 0 {
            *best = (*best).max(size);
            return Ok(());
        }
        if size + cand.count_ones() as usize <= *best || size + self.bound(cand) <= *best {
            return Ok(());
        }
        let bit = lowest(cand);
        let v = bit.trailing_zeros() as usize;
        if self.can_add(set, v) {
            self.maximize(set | bit, size + 1, cand & !bit & !self.adj[v], best, budget)?;
        }
        self.maximize(set, size, cand & !bit, best, budget)
    }

    /// The first maximum set in index-order DFS. With `include_first` this is
    /// the maximum `I` with the lexicographically smallest sorted list; with
    /// exclude-first it is the one whose complement has that property.
    pub(crate) fn certificate(&self, include_first: bool, limit: u64) -> Result<u64, SolverError> {
        let target = self.max_size(limit)?;
        let mut budget = Budget { nodes: 0, limit };
        let found = self.reach(0, 0, self.eligible, target, include_first, &mut budget)?;
        Ok(found.expect("the optimum is attained"))
    }

    fn reach(
        &self,
        set: u64,
        size: usize,
        cand: u64,
        target: usize,
        include_first: bool,
        budget: &mut Budget,
    ) -> Result<Option<u64>, SolverError> {
        budget.tick()?;
        // At the optimum no candidate can still be added, so excluding the
        // rest is the only completion.
        if size == target {
            return Ok(Some(set));
        }
        if cand == 0 || size + (cand.count_ones() as usize) < target || size + self.bound(cand) < target {
            return Ok(None);
        }
        let bit = lowest(cand);
        let v = bit.trailing_zeros() as usize;
        let include = self.can_add(set, v);
        for take in [include_first, !include_first] {
            let found = if take {
                if !include {
                    continue;
                }
                self.reach(
                    set | bit,
                    size + 1,
                    cand & !bit & !self.adj[v],
                    target,
                    include_first,
                    budget,
                )?
            } else {
                self.reach(set, size, cand & !bit, target, include_first, budget)?
            };
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_cover_bounds() {
        // C5: cover needs three cliques.
        let adj = [0b10010, 0b00101, 0b01010, 0b10100, 0b01001];
        assert_eq!(clique_cover(&adj, 0b11111), 3);
        // K4 minus nothing.
        let k4 = [0b1110, 0b1101, 0b1011, 0b0111];
        assert_eq!(clique_cover(&k4, 0b1111), 1);
        assert_eq!(clique_cover(&k4, 0), 0);
    }
}
