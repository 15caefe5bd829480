//! Exact bandwidth and directed bandwidth solvers for small graphs.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Adjacency, Digraph, Graph, GraphError, Layout};
use crate::{Budget, Refused, SearchLimits};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Refused(#[from] Refused),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exact bandwidth by iterative deepening over `k` with a branch-and-bound
/// search that fills positions left to right, trying low vertex ids first.
/// The returned layout is the lexicographically first optimal order.
pub fn bandwidth_brute(g: &Graph, limits: SearchLimits) -> Result<(u64, Layout), Refused> {
    let n = g.n();
    Refused::check_size(n as u64, limits.max_vertices)?;
    let adj = g.adjacency();
    let max_deg = (0..n as u32).map(|v| adj.degree(v)).max().unwrap_or(0) as u64;
    let mut budget = Budget::new(limits);
    let mut k = max_deg.div_ceil(2);
    loop {
        let mut s = Prefix::new(n, k, &adj, None);
        if s.search(&mut budget)? {
            return Ok((k, Layout::from_order(&s.order).expect("search builds a permutation")));
        }
        k += 1;
    }
}

/// Positional branch and bound shared by the undirected and directed solvers.
struct Prefix<'a> {
    k: u64,
    adj: &'a Adjacency,
    /// Predecessor lists for the directed case: all must be placed first.
    preds: Option<&'a Adjacency>,
    pos: Vec<u32>,
    order: Vec<u32>,
    /// Unplaced neighbours (undirected) or unplaced successors (directed).
    open: Vec<u32>,
}

impl<'a> Prefix<'a> {
    fn new(n: usize, k: u64, adj: &'a Adjacency, preds: Option<&'a Adjacency>) -> Self {
        let open = (0..n as u32).map(|v| adj.degree(v) as u32).collect();
        Prefix { k, adj, preds, pos: vec![0; n], order: Vec::with_capacity(n), open }
    }

    fn search(&mut self, budget: &mut Budget) -> Result<bool, Refused> {
        let n = self.pos.len();
        if self.order.len() == n {
            return Ok(true);
        }
        budget.spend(1)?;
        let q = self.order.len() as u64 + 1;
        // every placed vertex with open neighbours must still reach them
        for &u in &self.order {
            let p = self.pos[u as usize] as u64;
            let open = self.open[u as usize] as u64;
            if open > 0 && p + self.k < q + open - 1 {
                return Ok(false);
            }
        }
        for v in 0..n as u32 {
            if self.pos[v as usize] != 0 || !self.can_place(v, q) {
                continue;
            }
            self.place(v, q);
            if self.search(budget)? {
                return Ok(true);
            }
            self.unplace(v);
        }
        Ok(false)
    }

    fn can_place(&self, v: u32, q: u64) -> bool {
        if let Some(preds) = self.preds {
            if preds.neighbors(v).iter().any(|&u| self.pos[u as usize] == 0) {
                return false;
            }
            return preds.neighbors(v).iter().all(|&u| q - self.pos[u as usize] as u64 <= self.k);
        }
        self.adj.neighbors(v).iter().all(|&u| {
            let p = self.pos[u as usize] as u64;
            p == 0 || q - p <= self.k
        })
    }

    /// Vertices whose open count drops when `v` is placed.
    fn touched(&self, v: u32) -> &'a [u32] {
        match self.preds {
            Some(preds) => preds.neighbors(v),
            None => self.adj.neighbors(v),
        }
    }

    fn place(&mut self, v: u32, q: u64) {
        for &u in self.touched(v) {
            self.open[u as usize] -= 1;
        }
        self.pos[v as usize] = q as u32;
        self.order.push(v);
    }

    fn unplace(&mut self, v: u32) {
        self.order.pop();
        self.pos[v as usize] = 0;
        for &u in self.touched(v) {
            self.open[u as usize] += 1;
        }
    }
}

/// Decides bandwidth `<= k` with a dynamic program over (placed set, ordered
/// window of the last `k` placed vertices); failed states are memoised.
/// Graphs with more than 64 vertices (or `max_vertices`) are refused.
pub fn bandwidth_decide_dp(g: &Graph, k: u64, limits: SearchLimits) -> Result<Option<Layout>, Refused> {
    let n = g.n();
    Refused::check_size(n as u64, limits.max_vertices.min(64))?;
    let adj = g.adjacency();
    let nbr: Vec<u64> = (0..n as u32).map(|v| adj.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();
    let mut dp = WindowDp {
        n,
        k: k.min(n as u64) as usize,
        nbr,
        failed: HashSet::new(),
        order: Vec::with_capacity(n),
        budget: Budget::new(limits),
    };
    let mut window = Vec::new();
    if dp.extend(0, &mut window)? {
        Ok(Some(Layout::from_order(&dp.order).expect("permutation")))
    } else {
        Ok(None)
    }
}

struct WindowDp {
    n: usize,
    k: usize,
    nbr: Vec<u64>,
    failed: HashSet<(u64, Vec<u8>)>,
    order: Vec<u32>,
    budget: Budget,
}

impl WindowDp {
    fn extend(&mut self, placed: u64, window: &mut Vec<u8>) -> Result<bool, Refused> {
        if self.order.len() == self.n {
            return Ok(true);
        }
        let key = (placed, window.clone());
        if self.failed.contains(&key) {
            return Ok(false);
        }
        self.budget.spend(1)?;
        let in_window = window.iter().fold(0u64, |m, &u| m | 1 << u);
        for v in 0..self.n {
            if placed >> v & 1 == 1 {
                continue;
            }
            // placed neighbours must sit within the last k positions
            if self.nbr[v] & placed & !in_window != 0 {
                continue;
            }
            let now = placed | 1 << v;
            let mut next = window.clone();
            next.push(v as u8);
            if next.len() > self.k {
                let gone = next.remove(0) as usize;
                if self.nbr[gone] & !now != 0 {
                    continue;
                }
            }
            self.order.push(v as u32);
            if self.extend(now, &mut next)? {
                return Ok(true);
            }
            self.order.pop();
        }
        self.failed.insert(key);
        Ok(false)
    }
}

/// Exact directed bandwidth over topological orders, by iterative deepening
/// and depth-first search over linear extensions.
pub fn directed_bandwidth_brute(d: &Digraph, limits: SearchLimits) -> Result<(u64, Layout), SolveError> {
    let n = d.n();
    Refused::check_size(n as u64, limits.max_vertices)?;
    d.topological_order()?;
    let out = d.out_adjacency();
    let inn = d.in_adjacency();
    let lb = (0..n as u32).map(|v| out.degree(v).max(inn.degree(v))).max().unwrap_or(0) as u64;
    let mut budget = Budget::new(limits);
    let mut k = lb;
    loop {
        let mut s = Prefix::new(n, k, &out, Some(&inn));
        if s.search(&mut budget)? {
            return Ok((k, Layout::from_order(&s.order).expect("permutation")));
        }
        k += 1;
    }
}
