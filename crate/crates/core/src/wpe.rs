//! Weighted path emulation: instances, maps, the uniformity checker and two
//! exact solvers (depth-first search and a cut-frontier dynamic program).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::{Budget, Refused, SearchLimits};

/// Which end of the target path a pinned vertex must land on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum End {
    One,
    M,
}

impl End {
    pub fn column(self, m: u64) -> u64 {
        match self {
            End::One => 1,
            End::M => m,
        }
    }

    pub fn mirrored(self) -> End {
        match self {
            End::One => End::M,
            End::M => End::One,
        }
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            End::One => "1",
            End::M => "M",
        })
    }
}

/// Optional constraints on the images of the first and last vertex.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Pins {
    pub first: Option<End>,
    pub last: Option<End>,
}

impl Pins {
    pub const FREE: Pins = Pins { first: None, last: None };

    pub fn mirrored(self) -> Pins {
        Pins { first: self.first.map(End::mirrored), last: self.last.map(End::mirrored) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("path must have at least one vertex")]
    EmptyPath,
    #[error("target path length and emulation factor must be at least 1")]
    ZeroParameter,
    #[error("vertex {vertex} has weight 0")]
    ZeroWeight { vertex: u64 },
    #[error("total weight {total} differs from c*M = {expected}")]
    WeightSum { total: u128, expected: u128 },
    #[error("arithmetic overflow")]
    Overflow,
}

/// A weighted path `P_N` to be emulated on `P_M` with factor `c`.
/// Weights are stored run-length encoded so very long filler paths stay cheap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WpeInstance {
    runs: Vec<(u64, u64)>,
    n: u64,
    m: u64,
    c: u64,
    pins: Pins,
}

impl WpeInstance {
    pub fn new(weights: &[u64], m: u64, c: u64, pins: Pins) -> Result<Self, InstanceError> {
        Self::from_runs(weights.iter().map(|&w| (w, 1)), m, c, pins)
    }

    /// Builds from `(weight, count)` runs; zero-count runs are dropped.
    pub fn from_runs(runs: impl IntoIterator<Item = (u64, u64)>, m: u64, c: u64, pins: Pins) -> Result<Self, InstanceError> {
        if m == 0 || c == 0 {
            return Err(InstanceError::ZeroParameter);
        }
        let mut out: Vec<(u64, u64)> = Vec::new();
        let mut n = 0u64;
        let mut total = 0u128;
        for (w, count) in runs {
            if count == 0 {
                continue;
            }
            if w == 0 {
                return Err(InstanceError::ZeroWeight { vertex: n + 1 });
            }
            n = n.checked_add(count).ok_or(InstanceError::Overflow)?;
            total += w as u128 * count as u128;
            match out.last_mut() {
                Some((lw, lc)) if *lw == w => *lc += count,
                _ => out.push((w, count)),
            }
        }
        if n == 0 {
            return Err(InstanceError::EmptyPath);
        }
        let expected = c as u128 * m as u128;
        if total != expected {
            return Err(InstanceError::WeightSum { total, expected });
        }
        Ok(WpeInstance { runs: out, n, m, c, pins })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn pins(&self) -> Pins {
        self.pins
    }

    pub fn with_pins(&self, pins: Pins) -> WpeInstance {
        WpeInstance { pins, ..self.clone() }
    }

    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    /// Weight of vertex `i` (1-based).
    pub fn weight(&self, i: u64) -> Option<u64> {
        if i == 0 || i > self.n {
            return None;
        }
        let mut seen = 0;
        for &(w, count) in &self.runs {
            seen += count;
            if i <= seen {
                return Some(w);
            }
        }
        None
    }

    pub fn weights(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs.iter().flat_map(|&(w, count)| std::iter::repeat(w).take(count as usize))
    }

    pub fn max_weight(&self) -> u64 {
        self.runs.iter().map(|r| r.0).max().unwrap_or(0)
    }

    /// All weights and `c` multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<WpeInstance, InstanceError> {
        let c = self.c.checked_mul(factor).ok_or(InstanceError::Overflow)?;
        let runs = self
            .runs
            .iter()
            .map(|&(w, n)| w.checked_mul(factor).map(|w| (w, n)).ok_or(InstanceError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_runs(runs, self.m, c, self.pins)
    }

    /// Same weights with the pins mirrored (1 <-> M).
    pub fn mirrored(&self) -> WpeInstance {
        self.with_pins(self.pins.mirrored())
    }
}

/// A map `f : {1..N} -> {1..M}`, stored as `(position, count)` runs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EmulationMap {
    runs: Vec<(u64, u64)>,
    len: u64,
}

impl EmulationMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_positions(positions: &[u64]) -> Self {
        let mut f = Self::new();
        for &p in positions {
            f.push(p);
        }
        f
    }

    pub fn push(&mut self, pos: u64) {
        self.push_run(pos, 1);
    }

    pub fn push_run(&mut self, pos: u64, count: u64) {
        if count == 0 {
            return;
        }
        self.len += count;
        match self.runs.last_mut() {
            Some((p, c)) if *p == pos => *c += count,
            _ => self.runs.push((pos, count)),
        }
    }

    pub fn extend(&mut self, positions: impl IntoIterator<Item = u64>) {
        for p in positions {
            self.push(p);
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    /// Image of vertex `i` (1-based).
    pub fn get(&self, i: u64) -> Option<u64> {
        if i == 0 || i > self.len {
            return None;
        }
        let mut seen = 0;
        for &(p, count) in &self.runs {
            seen += count;
            if i <= seen {
                return Some(p);
            }
        }
        None
    }

    pub fn last(&self) -> Option<u64> {
        self.runs.last().map(|r| r.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs.iter().flat_map(|&(p, count)| std::iter::repeat(p).take(count as usize))
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// `p -> m + 1 - p`.
    pub fn mirrored(&self, m: u64) -> EmulationMap {
        EmulationMap { runs: self.runs.iter().map(|&(p, c)| (m + 1 - p, c)).collect(), len: self.len }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedMap {
    #[error("map has {got} entries but the path has {expected} vertices")]
    Length { got: u64, expected: u64 },
    #[error("vertex {vertex} mapped to {pos}, outside 1..={m}")]
    OutOfRange { vertex: u64, pos: u64, m: u64 },
}

/// First reason a map fails to be a uniform emulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `|f(vertex) - f(vertex+1)| > 1`.
    Step { vertex: u64, from: u64, to: u64 },
    /// Column weight differs from `c`.
    Column { column: u64, weight: u64, expected: u64 },
    /// A pinned endpoint landed elsewhere.
    Pin { vertex: u64, expected: u64, actual: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Step { vertex, from, to } => {
                write!(f, "edge ({vertex},{}) stretched from column {from} to {to}", vertex + 1)
            }
            Violation::Column { column, weight, expected } => {
                write!(f, "column {column} has weight {weight}, expected {expected}")
            }
            Violation::Pin { vertex, expected, actual } => {
                write!(f, "vertex {vertex} pinned to column {expected} but mapped to {actual}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmulationReport {
    pub violation: Option<Violation>,
}

impl EmulationReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks adjacency, column weights and pins, in that order.
pub fn check_uniform_emulation(inst: &WpeInstance, f: &EmulationMap) -> Result<EmulationReport, MalformedMap> {
    if f.len() != inst.n {
        return Err(MalformedMap::Length { got: f.len(), expected: inst.n });
    }
    let mut vertex = 1u64;
    for &(p, count) in f.runs() {
        if p == 0 || p > inst.m {
            return Err(MalformedMap::OutOfRange { vertex, pos: p, m: inst.m });
        }
        vertex += count;
    }

    let mut vertex = 0u64;
    for pair in f.runs().windows(2) {
        let (a, ca) = pair[0];
        let b = pair[1].0;
        vertex += ca;
        if a.abs_diff(b) > 1 {
            return Ok(EmulationReport { violation: Some(Violation::Step { vertex, from: a, to: b }) });
        }
    }

    // Walk weight runs and map runs together.
    let mut column = vec![0u64; inst.m as usize];
    let mut wi = inst.runs.iter().copied();
    let mut cur_w = wi.next();
    for &(p, mut count) in f.runs() {
        while count > 0 {
            let (w, left) = cur_w.expect("lengths already checked");
            let take = left.min(count);
            let slot = &mut column[(p - 1) as usize];
            *slot = slot.saturating_add(w.saturating_mul(take));
            count -= take;
            cur_w = if take == left { wi.next() } else { Some((w, left - take)) };
        }
    }
    for (j, &weight) in column.iter().enumerate() {
        if weight != inst.c {
            return Ok(EmulationReport {
                violation: Some(Violation::Column { column: j as u64 + 1, weight, expected: inst.c }),
            });
        }
    }

    let ends = [(1, inst.pins.first, f.runs()[0].0), (inst.n, inst.pins.last, f.last().unwrap_or(0))];
    for (vertex, pin, actual) in ends {
        if let Some(end) = pin {
            let expected = end.column(inst.m);
            if actual != expected {
                return Ok(EmulationReport { violation: Some(Violation::Pin { vertex, expected, actual }) });
            }
        }
    }
    Ok(EmulationReport { violation: None })
}

fn expanded(inst: &WpeInstance, limits: SearchLimits) -> Result<Vec<u64>, Refused> {
    Refused::check_size(inst.n.max(inst.m), limits.max_nodes.min(u32::MAX as u64))?;
    Ok(inst.weights().collect())
}

/// Depth-first search over maps in lexicographic order; returns the
/// lexicographically smallest uniform emulation, if any.
pub fn solve_wpe_brute(inst: &WpeInstance, limits: SearchLimits) -> Result<Option<EmulationMap>, Refused> {
    let w = expanded(inst, limits)?;
    let m = inst.m;
    let mut s = Brute {
        w: &w,
        m,
        c: inst.c,
        last_pin: inst.pins.last.map(|e| e.column(m)),
        column: vec![0; m as usize + 1],
        f: Vec::with_capacity(w.len()),
        budget: Budget::new(limits),
    };
    let starts: Vec<u64> = match inst.pins.first {
        Some(e) => vec![e.column(m)],
        None => (1..=m).collect(),
    };
    for p in starts {
        if s.place(p)? {
            return Ok(Some(EmulationMap::from_positions(&s.f)));
        }
    }
    Ok(None)
}

struct Brute<'a> {
    w: &'a [u64],
    m: u64,
    c: u64,
    last_pin: Option<u64>,
    column: Vec<u64>,
    f: Vec<u64>,
    budget: Budget,
}

impl Brute<'_> {
    /// Tries to map the next vertex to `p` and complete the search.
    fn place(&mut self, p: u64) -> Result<bool, Refused> {
        self.budget.spend(1)?;
        let i = self.f.len();
        let w = self.w[i];
        if self.column[p as usize] + w > self.c {
            return Ok(false);
        }
        self.column[p as usize] += w;
        self.f.push(p);
        if self.feasible(p) {
            if i + 1 == self.w.len() {
                // all columns <= c and the total is c*M, so every column is full
                if self.last_pin.map_or(true, |e| e == p) {
                    return Ok(true);
                }
            } else {
                for q in [p.wrapping_sub(1), p, p + 1] {
                    if q >= 1 && q <= self.m && self.place(q)? {
                        return Ok(true);
                    }
                }
            }
        }
        self.f.pop();
        self.column[p as usize] -= w;
        Ok(false)
    }

    /// Can the remaining vertices still reach every underfull column?
    fn feasible(&self, p: u64) -> bool {
        let remaining = (self.w.len() - self.f.len()) as u64;
        let lo = (1..=self.m).find(|&j| self.column[j as usize] < self.c);
        let hi = (1..=self.m).rev().find(|&j| self.column[j as usize] < self.c);
        if let (Some(lo), Some(hi)) = (lo, hi) {
            let reach = p.abs_diff(lo).min(p.abs_diff(hi)) + (hi - lo);
            if reach > remaining {
                return false;
            }
        }
        if let Some(e) = self.last_pin {
            if p.abs_diff(e) > remaining {
                return false;
            }
        }
        true
    }
}

/// Column-by-column dynamic program. The state after column `j` is the set
/// of vertices mapped to columns `<= j`, stored as its maximal intervals;
/// every vertex adjacent to that set must go to column `j + 1`, so only
/// sets whose boundary edges are few (at most about `2c`) ever arise.
pub fn solve_wpe_dp(inst: &WpeInstance, limits: SearchLimits) -> Result<Option<EmulationMap>, Refused> {
    let w = expanded(inst, limits)?;
    let n = w.len() as u32;
    let m = inst.m;
    let c = inst.c;
    let first_col = inst.pins.first.map(|e| e.column(m));
    let last_col = inst.pins.last.map(|e| e.column(m));
    let mut budget = Budget::new(limits);

    type State = Vec<(u32, u32)>;
    // per layer: states in insertion order, and for each its parent and column set
    let mut layers: Vec<Vec<(State, usize, Vec<u32>)>> = vec![vec![(Vec::new(), 0, Vec::new())]];

    for j in 1..=m {
        let prev = layers.last().expect("layer 0 exists");
        let mut next: Vec<(State, usize, Vec<u32>)> = Vec::new();
        let mut index: HashMap<State, usize> = HashMap::new();
        for (si, (state, _, _)) in prev.iter().enumerate() {
            budget.spend(1)?;
            let free = complement(state, n);
            let placed = |v: u32| state.iter().any(|&(a, b)| a <= v && v <= b);
            let forced: Vec<bool> = free
                .iter()
                .map(|&v| (v > 1 && placed(v - 1)) || (v < n && placed(v + 1)))
                .collect();
            let mut chosen = Vec::new();
            let mut out = Vec::new();
            subsets(&free, &forced, &w, 0, c, &mut chosen, &mut out, &mut budget)?;
            for col in out {
                let pin_ok = |v: u32, want: Option<u64>| !col.contains(&v) || want.map_or(true, |t| t == j);
                if !pin_ok(1, first_col) || !pin_ok(n, last_col) {
                    continue;
                }
                let ns = merge(state, &col);
                if !index.contains_key(&ns) {
                    index.insert(ns.clone(), next.len());
                    next.push((ns, si, col));
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        layers.push(next);
    }

    let full: State = vec![(1, n)];
    let last = layers.last().expect("m >= 1");
    let Some(mut at) = last.iter().position(|(s, _, _)| *s == full) else {
        return Ok(None);
    };
    let mut f = vec![0u64; n as usize];
    for j in (1..=m as usize).rev() {
        let (_, parent, col) = &layers[j][at];
        for &v in col {
            f[v as usize - 1] = j as u64;
        }
        at = *parent;
    }
    Ok(Some(EmulationMap::from_positions(&f)))
}

fn complement(state: &[(u32, u32)], n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut next = 1;
    for &(a, b) in state {
        out.extend(next..a);
        next = b + 1;
    }
    out.extend(next..=n);
    out
}

fn merge(state: &[(u32, u32)], col: &[u32]) -> Vec<(u32, u32)> {
    let mut pts: Vec<(u32, u32)> = state.to_vec();
    pts.extend(col.iter().map(|&v| (v, v)));
    pts.sort_unstable();
    let mut out: Vec<(u32, u32)> = Vec::new();
    for (a, b) in pts {
        match out.last_mut() {
            Some((_, e)) if *e + 1 >= a => *e = (*e).max(b),
            _ => out.push((a, b)),
        }
    }
    out
}

/// Subsets of `free` with weight exactly `left`, containing every forced vertex.
#[allow(clippy::too_many_arguments)]
fn subsets(
    free: &[u32],
    forced: &[bool],
    w: &[u64],
    at: usize,
    left: u64,
    chosen: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    budget: &mut Budget,
) -> Result<(), Refused> {
    budget.spend(1)?;
    if at == free.len() {
        if left == 0 {
            out.push(chosen.clone());
        }
        return Ok(());
    }
    if left == 0 {
        if forced[at..].iter().all(|&f| !f) {
            out.push(chosen.clone());
        }
        return Ok(());
    }
    let v = free[at];
    let wv = w[v as usize - 1];
    if wv <= left {
        chosen.push(v);
        subsets(free, forced, w, at + 1, left - wv, chosen, out, budget)?;
        chosen.pop();
    }
    if !forced[at] {
        subsets(free, forced, w, at + 1, left, chosen, out, budget)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(w: &[u64], m: u64, c: u64) -> WpeInstance {
        WpeInstance::new(w, m, c, Pins::FREE).unwrap()
    }

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(WpeInstance::new(&[1, 2, 2], 2, 2, Pins::FREE), Err(InstanceError::WeightSum { .. })));
        assert!(matches!(WpeInstance::new(&[0, 2], 1, 2, Pins::FREE), Err(InstanceError::ZeroWeight { vertex: 1 })));
        assert!(matches!(WpeInstance::new(&[], 1, 1, Pins::FREE), Err(InstanceError::EmptyPath)));
        let i = WpeInstance::from_runs([(1, 3), (1, 2), (2, 0)], 5, 1, Pins::FREE).unwrap();
        assert_eq!(i.runs(), &[(1, 5)]);
        assert_eq!(i.weight(5), Some(1));
        assert_eq!(i.weight(6), None);
    }

    #[test]
    fn checker_orders_violations() {
        let i = inst(&[2, 1, 2, 1], 3, 2);
        let r = check_uniform_emulation(&i, &EmulationMap::from_positions(&[1, 3, 3, 2])).unwrap();
        assert!(matches!(r.violation, Some(Violation::Step { vertex: 1, from: 1, to: 3 })));
        assert!(check_uniform_emulation(&i, &EmulationMap::from_positions(&[1, 2, 3, 2])).unwrap().is_valid());
        let r = check_uniform_emulation(&i, &EmulationMap::from_positions(&[1, 2, 2, 3])).unwrap();
        assert!(matches!(r.violation, Some(Violation::Column { column: 2, weight: 3, .. })));
        let pinned = i.with_pins(Pins { first: Some(End::M), last: None });
        let ok = solve_wpe_brute(&i, lim()).unwrap().unwrap();
        assert!(check_uniform_emulation(&i, &ok).unwrap().is_valid());
        if ok.get(1) != Some(3) {
            let r = check_uniform_emulation(&pinned, &ok).unwrap();
            assert!(matches!(r.violation, Some(Violation::Pin { vertex: 1, expected: 3, .. })));
        }
    }

    #[test]
    fn checker_reports_malformed_maps() {
        let i = inst(&[1, 1], 2, 1);
        assert!(matches!(
            check_uniform_emulation(&i, &EmulationMap::from_positions(&[1])),
            Err(MalformedMap::Length { got: 1, expected: 2 })
        ));
        assert!(matches!(
            check_uniform_emulation(&i, &EmulationMap::from_positions(&[1, 3])),
            Err(MalformedMap::OutOfRange { vertex: 2, pos: 3, m: 2 })
        ));
    }

    #[test]
    fn single_column() {
        let i = inst(&[1, 2, 1], 1, 4);
        let f = EmulationMap::from_positions(&[1, 1, 1]);
        assert!(check_uniform_emulation(&i, &f).unwrap().is_valid());
        assert_eq!(solve_wpe_brute(&i, lim()).unwrap(), Some(f.clone()));
        assert_eq!(solve_wpe_dp(&i, lim()).unwrap(), Some(f));
    }

    #[test]
    fn figure_example_has_an_emulation() {
        let i = inst(&[2, 1, 2, 1], 3, 2);
        for f in [solve_wpe_brute(&i, lim()).unwrap(), solve_wpe_dp(&i, lim()).unwrap()] {
            let f = f.expect("yes-instance");
            assert!(check_uniform_emulation(&i, &f).unwrap().is_valid());
        }
        // exhaustive: vertices 1 and 3 each fill a column, 2 and 4 share the middle
        assert_eq!(solve_wpe_brute(&i, lim()).unwrap().unwrap().to_vec(), vec![1, 2, 3, 2]);
    }

    #[test]
    fn hand_no_instances() {
        for i in [inst(&[1, 2, 2, 1], 3, 2), inst(&[1, 2, 3], 3, 2)] {
            assert_eq!(solve_wpe_brute(&i, lim()).unwrap(), None);
            assert_eq!(solve_wpe_dp(&i, lim()).unwrap(), None);
        }
    }

    #[test]
    fn tiny_yes_instances() {
        let i = inst(&[1, 1], 2, 1);
        assert_eq!(solve_wpe_brute(&i, lim()).unwrap().unwrap().to_vec(), vec![1, 2]);
        let i = inst(&[1, 1, 1], 3, 1);
        assert_eq!(solve_wpe_dp(&i, lim()).unwrap().unwrap().to_vec(), vec![1, 2, 3]);
        let pinned = i.with_pins(Pins { first: Some(End::M), last: None });
        assert_eq!(solve_wpe_brute(&pinned, lim()).unwrap().unwrap().to_vec(), vec![3, 2, 1]);
        assert_eq!(solve_wpe_dp(&pinned, lim()).unwrap().unwrap().to_vec(), vec![3, 2, 1]);
        let both = i.with_pins(Pins { first: Some(End::M), last: Some(End::M) });
        assert_eq!(solve_wpe_brute(&both, lim()).unwrap(), None);
        assert_eq!(solve_wpe_dp(&both, lim()).unwrap(), None);
    }

    #[test]
    fn both_pins_at_m_toy() {
        let i = WpeInstance::new(&[1, 1, 2, 1, 1], 3, 2, Pins { first: Some(End::M), last: Some(End::M) }).unwrap();
        let f = EmulationMap::from_positions(&[3, 2, 1, 2, 3]);
        assert!(check_uniform_emulation(&i, &f).unwrap().is_valid());
        assert!(solve_wpe_brute(&i, lim()).unwrap().is_some());
        assert!(solve_wpe_dp(&i, lim()).unwrap().is_some());
    }

    #[test]
    fn guard_refuses() {
        let i = WpeInstance::from_runs([(1, 1000)], 100, 10, Pins::FREE).unwrap();
        assert!(solve_wpe_brute(&i, SearchLimits::new(50)).is_err());
        assert!(solve_wpe_dp(&i, SearchLimits::new(50)).is_err());
    }

    #[test]
    fn map_runs_and_mirror() {
        let mut f = EmulationMap::new();
        f.push_run(2, 3);
        f.push(2);
        f.push(3);
        assert_eq!(f.runs(), &[(2, 4), (3, 1)]);
        assert_eq!(f.get(5), Some(3));
        assert_eq!(f.mirrored(3).to_vec(), vec![2, 2, 2, 2, 1]);
    }
}
