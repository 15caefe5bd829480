//! Compiles a t-normalized formula and a target weight `k` into a weighted
//! path emulation instance, and turns a satisfying `k`-assignment into a
//! uniform emulation of that instance.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Assignment, ElementKind, Formula, FormulaLayout, LayoutError};
use crate::wpe::{EmulationMap, End, InstanceError, Pins, WpeInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("formula has no disjunction; the reduction needs at least one disjunction level")]
    NoDisjunction,
    #[error("k must be at least 1")]
    ZeroK,
    #[error("k = {k} exceeds the number of variables {n}")]
    KExceedsN { k: u32, n: u32 },
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("arithmetic overflow while building the instance")]
    Overflow,
    #[error("vertex {vertex} would get weight {weight} < 1")]
    NonPositiveWeight { vertex: u64, weight: i128 },
    #[error("pre-filler weight {gamma} exceeds c*M = {total}")]
    NegativeFiller { gamma: u128, total: u128 },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("assignment sets {got} variables true, expected k = {expected}")]
    AssignmentSize { expected: u32, got: usize },
    #[error("assignment mentions variable {var} outside 1..={n}")]
    AssignmentRange { var: u32, n: u32 },
    #[error("assignment does not satisfy the formula")]
    AssignmentNotSatisfying,
    #[error("column {column} receives weight {z} before filling (c = {c}), violating the {claim} bound")]
    Column { column: u64, z: u64, c: u64, claim: &'static str },
    #[error(transparent)]
    Fold(#[from] FoldError),
}

/// The weight constants of the reduction; all depend only on `k` and `t'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constants {
    pub k: u32,
    pub t_prime: u32,
    /// Room for weight-one vertices.
    pub cp: u64,
    pub cu: u64,
    /// Selecting weights, indexed by or-depth minus one.
    pub cd: Vec<u64>,
    pub cv: u64,
    /// Anchor weights, indexed by or-depth minus one.
    pub ca: Vec<u64>,
    pub cl: u64,
    pub cr: u64,
    pub c: u64,
}

impl Constants {
    pub fn cd(&self, depth: u32) -> u64 {
        self.cd[depth as usize - 1]
    }

    pub fn ca(&self, depth: u32) -> u64 {
        self.ca[depth as usize - 1]
    }

    /// `1, cp, cu, cd_t'..cd_1, cv, ca_t'..ca_1, cL, cR, c`; must be strictly increasing.
    pub fn chain(&self) -> Vec<u64> {
        let mut out = vec![1, self.cp, self.cu];
        out.extend(self.cd.iter().rev());
        out.push(self.cv);
        out.extend(self.ca.iter().rev());
        out.extend([self.cl, self.cr, self.c]);
        out
    }

    pub fn is_strict_chain(&self) -> bool {
        self.chain().windows(2).all(|w| w[0] < w[1])
    }
}

pub fn derive_constants(k: u32, t_prime: u32) -> Result<Constants, ReductionError> {
    if k == 0 {
        return Err(ReductionError::ZeroK);
    }
    if t_prime == 0 {
        return Err(ReductionError::NoDisjunction);
    }
    let ov = || ReductionError::Overflow;
    let mul = |a: u64, b: u64| a.checked_mul(b).ok_or_else(ov);
    let (k64, t64) = (k as u64, t_prime as u64);
    let cp = 5 * t64 + 3 * k64 + 1;
    let cu = mul(3, cp)?;
    let t = t_prime as usize;
    let mut cd = vec![0; t];
    cd[t - 1] = mul(mul(3, k64)?, cu)?;
    for i in (0..t - 1).rev() {
        cd[i] = mul(3, cd[i + 1])?;
    }
    let cv = mul(3, cd[0])?;
    let mut ca = vec![0; t];
    ca[t - 1] = mul(3, cv)?;
    for i in (0..t - 1).rev() {
        ca[i] = mul(3, ca[i + 1])?;
    }
    let cl = mul(2, ca[0])?;
    let cr = mul(k64 + t64 + 1, cl)?;
    let c = mul(2 * (k64 + t64), cr)?.checked_add(1).ok_or_else(ov)?;
    Ok(Constants { k, t_prime, cp, cu, cd, cv, ca, cl, cr, c })
}

/// Which endpoint pins the produced instance carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    Free,
    First1,
    FirstM,
    Both1,
    BothM,
}

impl Variant {
    pub const ALL: [Variant; 5] = [Variant::Free, Variant::First1, Variant::FirstM, Variant::Both1, Variant::BothM];

    pub fn pins(self) -> Pins {
        match self {
            Variant::Free => Pins::FREE,
            Variant::First1 => Pins { first: Some(End::One), last: None },
            Variant::FirstM => Pins { first: Some(End::M), last: None },
            Variant::Both1 => Pins { first: Some(End::One), last: Some(End::One) },
            Variant::BothM => Pins { first: Some(End::M), last: Some(End::M) },
        }
    }

    fn pins_both(self) -> bool {
        matches!(self, Variant::Both1 | Variant::BothM)
    }

    fn mirrored(self) -> bool {
        matches!(self, Variant::FirstM | Variant::BothM)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Free => "free",
            Variant::First1 => "first1",
            Variant::FirstM => "firstM",
            Variant::Both1 => "both1",
            Variant::BothM => "bothM",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.to_string() == s)
            .ok_or_else(|| format!("unknown variant `{s}` (expected free, first1, firstM, both1 or bothM)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarRole {
    RightTurn,
    BackPath,
    LeftTurn,
    /// Weight-one vertices on either side of the heavy run.
    Slack,
    Heavy,
    Determining,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DisjRole {
    RightTurn,
    BackPath,
    LeftTurn,
    WeightOne,
    LeftAnchor,
    RightAnchor,
    Selecting,
}

/// What a vertex of the constructed path is for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Floor,
    /// Variable part `part` (1-based).
    Var { part: u32, sub: VarRole },
    /// Disjunction part for or-depth `level`.
    Disj { level: u32, sub: DisjRole },
    Filler,
}

impl Role {
    pub fn name(&self) -> &'static str {
        match self {
            Role::Floor => "floor",
            Role::Filler => "filler",
            Role::Var { sub, .. } => match sub {
                VarRole::RightTurn => "var-right-turn",
                VarRole::BackPath => "var-back-path",
                VarRole::LeftTurn => "var-left-turn",
                VarRole::Slack => "var-slack",
                VarRole::Heavy => "var-heavy",
                VarRole::Determining => "var-determining",
            },
            Role::Disj { sub, .. } => match sub {
                DisjRole::RightTurn => "disj-right-turn",
                DisjRole::BackPath => "disj-back-path",
                DisjRole::LeftTurn => "disj-left-turn",
                DisjRole::WeightOne => "disj-weight-one",
                DisjRole::LeftAnchor => "disj-left-anchor",
                DisjRole::RightAnchor => "disj-right-anchor",
                DisjRole::Selecting => "disj-selecting",
            },
        }
    }

    /// Part or level number, if any.
    pub fn detail(&self) -> Option<u32> {
        match self {
            Role::Var { part, .. } => Some(*part),
            Role::Disj { level, .. } => Some(*level),
            _ => None,
        }
    }
}

/// A built instance together with its gadget bookkeeping.
#[derive(Debug, Clone)]
pub struct WpeConstruction {
    pub formula: Formula,
    pub k: u32,
    pub variant: Variant,
    pub constants: Constants,
    pub layout: FormulaLayout,
    pub instance: WpeInstance,
    /// `(role, count)` runs covering all `N` vertices in order.
    pub roles: Vec<(Role, u64)>,
    /// Total weight before the filler path.
    pub gamma: u128,
    pub filler_len: u64,
}

impl WpeConstruction {
    pub fn m(&self) -> u64 {
        self.layout.m
    }

    pub fn c(&self) -> u64 {
        self.constants.c
    }

    /// Number of vertices with each role name, in first-appearance order.
    pub fn role_counts(&self) -> Vec<(&'static str, u64)> {
        let mut out: Vec<(&'static str, u64)> = Vec::new();
        for (r, n) in &self.roles {
            match out.iter_mut().find(|(name, _)| *name == r.name()) {
                Some(e) => e.1 += n,
                None => out.push((r.name(), *n)),
            }
        }
        out
    }

    /// Length of one variable part.
    pub fn variable_part_len(&self) -> u64 {
        let n = self.layout.n as u64;
        1 + (self.m() - 2) + 1 + n + (2 * n + self.layout.root().size) + (n - 1)
    }
}

struct PathBuilder {
    weights: Vec<(u64, u64)>,
    roles: Vec<(Role, u64)>,
    len: u64,
    gamma: u128,
}

impl PathBuilder {
    fn push(&mut self, w: u64, count: u64, role: Role) {
        if count == 0 {
            return;
        }
        self.len += count;
        self.gamma += w as u128 * count as u128;
        match self.weights.last_mut() {
            Some((lw, n)) if *lw == w => *n += count,
            _ => self.weights.push((w, count)),
        }
        match self.roles.last_mut() {
            Some((lr, n)) if *lr == role => *n += count,
            _ => self.roles.push((role, count)),
        }
    }
}

/// Weights of the `M` floor vertices (before any pin adjustment).
fn floor_weights(layout: &FormulaLayout, cs: &Constants) -> Result<Vec<u64>, ReductionError> {
    let m = layout.m;
    let n = layout.n as u64;
    let (c, k) = (cs.c as i128, cs.k as i128);
    let (cp, cu, cv) = (cs.cp as i128, cs.cu as i128, cs.cv as i128);
    let kt = (cs.k + cs.t_prime) as i128;
    let mut w = vec![0i128; m as usize + 1];
    w[1] = c - kt * cs.cl as i128;
    for i in 2..=n + 1 {
        w[i as usize] = c - k * cv - cp;
    }
    for i in n + 2..=2 * n + 1 {
        w[i as usize] = c - k * cv - cu - cp;
    }
    for i in 2 * n + 2..=m - n - 1 {
        w[i as usize] = c - cp - k * cv;
    }
    for (_, e) in layout.elements.iter().enumerate().filter(|(_, e)| e.kind == ElementKind::Or) {
        let a = e.anchors.expect("disjunctions carry anchors");
        let depth = e.or_depth;
        w[a.left as usize] -= cs.ca(depth) as i128;
        w[a.right as usize] -= cs.ca(depth) as i128;
        for i in a.left..=a.right {
            w[i as usize] -= cs.cd(depth) as i128;
        }
    }
    let mut mid = vec![None; m as usize + 1];
    for (_, e) in layout.literals() {
        mid[e.midpoint(layout.n).expect("literal") as usize] = Some(matches!(e.kind, ElementKind::Pos(_)));
    }
    for i in 2 * n + 2..=m - n - 1 {
        w[i as usize] -= match mid[i as usize] {
            Some(true) => (k - 1) * cu,
            Some(false) => 0,
            None => k * cu,
        };
    }
    for i in m - n..=m - 1 {
        w[i as usize] = c - k * cv - cp;
    }
    w[m as usize] = c - kt * cs.cr as i128;
    w[1..]
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if x < 1 {
                Err(ReductionError::NonPositiveWeight { vertex: i as u64 + 1, weight: x })
            } else {
                Ok(x as u64)
            }
        })
        .collect()
}

/// Builds the weighted path for `f` and `k` with the pins of `variant`.
pub fn build_wpe_instance(f: &Formula, k: u32, variant: Variant) -> Result<WpeConstruction, ReductionError> {
    let layout = f.compute_layout()?;
    if layout.t_prime == 0 {
        return Err(ReductionError::NoDisjunction);
    }
    if k == 0 {
        return Err(ReductionError::ZeroK);
    }
    if k > layout.n {
        return Err(ReductionError::KExceedsN { k, n: layout.n });
    }
    let cs = derive_constants(k, layout.t_prime)?;
    let m = layout.m;
    let n = layout.n as u64;
    let s = layout.root().size;
    let c = cs.c;
    let mut floor = floor_weights(&layout, &cs)?;
    if variant.pins_both() {
        floor[0] -= 1;
        if floor[0] == 0 {
            return Err(ReductionError::NonPositiveWeight { vertex: 1, weight: 0 });
        }
    }

    let mut pb = PathBuilder { weights: Vec::new(), roles: Vec::new(), len: 0, gamma: 0 };
    for w in &floor {
        pb.push(*w, 1, Role::Floor);
    }

    // heavy weights of a variable part, shared by all k parts
    let heavy_len = 2 * n + s;
    let mut marked = vec![false; heavy_len as usize + 1];
    marked[n as usize] = true;
    for (_, e) in layout.literals() {
        let mid = e.midpoint(layout.n).expect("literal");
        match e.kind {
            ElementKind::Pos(i) => {
                for j in e.left..=e.right {
                    if j != mid {
                        marked[(j - i as u64 - 1) as usize] = true;
                    }
                }
            }
            ElementKind::Neg(i) => marked[(mid - i as u64 - 1) as usize] = true,
            _ => unreachable!(),
        }
    }
    for part in 1..=k {
        let role = |sub| Role::Var { part, sub };
        pb.push(cs.cr, 1, role(VarRole::RightTurn));
        pb.push(1, m - 2, role(VarRole::BackPath));
        pb.push(cs.cl, 1, role(VarRole::LeftTurn));
        pb.push(1, n, role(VarRole::Slack));
        for r in 1..=heavy_len {
            let w = if marked[r as usize] { cs.cv + cs.cu } else { cs.cv };
            let sub = if r == n { VarRole::Determining } else { VarRole::Heavy };
            pb.push(w, 1, role(sub));
        }
        pb.push(1, n - 1, role(VarRole::Slack));
    }

    for level in 1..=layout.t_prime {
        let role = |sub| Role::Disj { level, sub };
        pb.push(cs.cr, 1, role(DisjRole::RightTurn));
        pb.push(1, m - 2, role(DisjRole::BackPath));
        pb.push(cs.cl, 1, role(DisjRole::LeftTurn));
        let mut prev_ra = 1;
        for (_, e) in layout.disjunctions_at(level) {
            let a = e.anchors.expect("disjunction");
            let run = (2 * a.terms - 2) * a.term_size;
            pb.push(1, a.left - prev_ra - 1, role(DisjRole::WeightOne));
            pb.push(cs.ca(level), 1, role(DisjRole::LeftAnchor));
            pb.push(1, run, role(DisjRole::WeightOne));
            pb.push(cs.cd(level), 3 * a.term_size, role(DisjRole::Selecting));
            pb.push(1, run, role(DisjRole::WeightOne));
            pb.push(cs.ca(level), 1, role(DisjRole::RightAnchor));
            prev_ra = a.right;
        }
        pb.push(1, m - prev_ra - 1, role(DisjRole::WeightOne));
    }

    let total = c as u128 * m as u128;
    if pb.gamma > total {
        return Err(ReductionError::NegativeFiller { gamma: pb.gamma, total });
    }
    let gamma = pb.gamma;
    let filler_len = u64::try_from(total - gamma).map_err(|_| ReductionError::Overflow)?;
    pb.push(1, filler_len, Role::Filler);
    let instance = WpeInstance::from_runs(pb.weights, m, c, variant.pins())?;
    Ok(WpeConstruction {
        formula: f.clone(),
        k,
        variant,
        constants: cs,
        layout,
        instance,
        roles: pb.roles,
        gamma,
        filler_len,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldDirection {
    Right,
    Left,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoldError {
    #[error("{gamma} internal vertices cannot bridge positions {from} and {to}")]
    TooShort { from: u64, to: u64, gamma: u64 },
    #[error("fold from {from} to {to} would leave the path at position {pos}")]
    OutOfRange { from: u64, to: u64, pos: i64 },
}

fn fold_right_signed(i: i64, j: i64, gamma: i64) -> Vec<i64> {
    if j < i {
        let mut v = fold_right_signed(j, i, gamma);
        v.reverse();
        return v;
    }
    let d = j - i;
    (1..=gamma).map(|delta| if 2 * delta <= d + gamma { i + delta } else { j + gamma - delta + 1 }).collect()
}

/// Positions for `gamma` internal vertices of a path whose ends sit at `i`
/// and `j`. A right fold spends surplus length beyond the right end of the
/// span, a left fold beyond the left end. Each position is used at most twice.
pub fn fold_path(i: u64, j: u64, gamma: u64, dir: FoldDirection) -> Result<Vec<u64>, FoldError> {
    if gamma + 1 < i.abs_diff(j) {
        return Err(FoldError::TooShort { from: i, to: j, gamma });
    }
    let (si, sj, g) = (i as i64, j as i64, gamma as i64);
    let raw = match dir {
        FoldDirection::Right => fold_right_signed(si, sj, g),
        FoldDirection::Left => fold_right_signed(-si, -sj, g).into_iter().map(|p| -p).collect(),
    };
    raw.into_iter()
        .map(|p| if p < 1 { Err(FoldError::OutOfRange { from: i, to: j, pos: p }) } else { Ok(p as u64) })
        .collect()
}

fn check_assignment(con: &WpeConstruction, a: &Assignment) -> Result<Vec<u32>, ReductionError> {
    let n = con.layout.n;
    if let Some(var) = a.vars().find(|&v| v == 0 || v > n) {
        return Err(ReductionError::AssignmentRange { var, n });
    }
    if a.len() != con.k as usize {
        return Err(ReductionError::AssignmentSize { expected: con.k, got: a.len() });
    }
    if !con.formula.evaluate(a) {
        return Err(ReductionError::AssignmentNotSatisfying);
    }
    Ok(a.vars().collect())
}

/// Builds a uniform emulation of `con.instance` from a satisfying assignment.
pub fn build_emulation_witness(con: &WpeConstruction, a: &Assignment) -> Result<EmulationMap, ReductionError> {
    let chosen = check_assignment(con, a)?;
    let layout = &con.layout;
    let m = layout.m;
    let n = layout.n as u64;
    let s = layout.root().size;
    let values = con.formula.element_values(a);
    let mut f = EmulationMap::new();

    f.extend(1..=m);
    let turn = |f: &mut EmulationMap| {
        f.push(m);
        f.extend((2..m).rev());
        f.push(1);
    };
    for &t in &chosen {
        let t = t as u64;
        turn(&mut f);
        f.extend(fold_path(1, t + 2, n, FoldDirection::Right)?);
        let last_heavy = t + 1 + 2 * n + s;
        f.extend(t + 2..=last_heavy);
        f.extend(fold_path(last_heavy, m, n - 1, FoldDirection::Left)?);
    }
    for level in 1..=layout.t_prime {
        turn(&mut f);
        let mut prev = 1;
        for (_, e) in layout.disjunctions_at(level) {
            let a = e.anchors.expect("disjunction");
            let run = (2 * a.terms - 2) * a.term_size;
            f.extend(fold_path(prev, a.left, a.left - prev - 1, FoldDirection::Right)?);
            f.push(a.left);
            let term = e.children.iter().copied().find(|&c| values[c]).unwrap_or(e.children[0]);
            let first_sel = layout.elements[term].left - a.term_size;
            let last_sel = first_sel + 3 * a.term_size - 1;
            f.extend(fold_path(a.left, first_sel, run, FoldDirection::Right)?);
            f.extend(first_sel..=last_sel);
            f.extend(fold_path(last_sel, a.right, run, FoldDirection::Right)?);
            f.push(a.right);
            prev = a.right;
        }
        f.extend(prev + 1..m);
    }

    // column loads so far
    let c = con.c();
    let mut z = vec![0u64; m as usize + 1];
    let mut weights = con.instance.weights();
    for &(p, count) in f.runs() {
        for _ in 0..count {
            let w = weights.next().expect("prefix shorter than the instance");
            z[p as usize] = z[p as usize].checked_add(w).ok_or(ReductionError::Overflow)?;
        }
    }
    let both = con.variant.pins_both();
    let claim = |j: u64| {
        if j == 1 || j == m {
            "z1"
        } else if j <= 2 * n + 1 {
            "z2"
        } else if j >= m - n - 1 {
            "z3"
        } else {
            "z4"
        }
    };
    let expect_one = if both { c - 1 } else { c };
    if z[1] != expect_one {
        return Err(ReductionError::Column { column: 1, z: z[1], c, claim: "z1" });
    }
    if z[m as usize] != c {
        return Err(ReductionError::Column { column: m, z: z[m as usize], c, claim: "z1" });
    }
    for j in (2..m).rev() {
        if z[j as usize] >= c {
            return Err(ReductionError::Column { column: j, z: z[j as usize], c, claim: claim(j) });
        }
        f.push_run(j, c - z[j as usize]);
    }
    if both {
        f.push(1);
    }
    if f.len() != con.instance.n() {
        return Err(ReductionError::Column { column: 0, z: f.len(), c, claim: "filler length" });
    }
    Ok(if con.variant.mirrored() { f.mirrored(m) } else { f })
}

/// The padding used for strong NP-hardness: `n` unused variables are added
/// and exactly `n` of the `2n` variables must be true.
pub fn pad_for_strong_np(f: &Formula) -> Result<(Formula, u32), crate::formula::FormulaError> {
    let n = f.num_vars();
    Ok((f.with_num_vars(2 * n)?, n))
}

/// Assignment for the padded formula: the original true set plus enough
/// fresh variables to reach `n` true.
pub fn pad_assignment(a: &Assignment, n: u32) -> Assignment {
    let fresh = n as usize - a.len();
    Assignment::from_vars(a.vars().chain((n + 1..=2 * n).take(fresh)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_formula;
    use crate::wpe::check_uniform_emulation;

    fn single_clause() -> Formula {
        parse_formula("(and (or x1 x2))").unwrap()
    }

    #[test]
    fn constants_match_hand_values() {
        let c = derive_constants(1, 1).unwrap();
        assert_eq!(c.chain(), vec![1, 9, 27, 81, 243, 729, 1458, 4374, 17497]);
        let c = derive_constants(2, 1).unwrap();
        assert_eq!(c.chain(), vec![1, 12, 36, 216, 648, 1944, 3888, 15552, 93313]);
        for k in 1..=5 {
            for t in 1..=3 {
                assert!(derive_constants(k, t).unwrap().is_strict_chain(), "k={k} t'={t}");
            }
        }
        assert_eq!(derive_constants(1, 0), Err(ReductionError::NoDisjunction));
    }

    #[test]
    fn floor_of_single_clause() {
        let con = build_wpe_instance(&single_clause(), 1, Variant::Free).unwrap();
        let i = &con.instance;
        assert_eq!((con.m(), con.c()), (133, 17497));
        assert_eq!(i.weight(1), Some(14581));
        assert_eq!(i.weight(133), Some(8749));
        assert_eq!(i.weight(4), Some(17218));
        assert_eq!(i.weight(5), Some(17218));
        assert_eq!(i.weight(2), Some(17497 - 243 - 9));
        let total: u128 = i.runs().iter().map(|&(w, n)| w as u128 * n as u128).sum();
        assert_eq!(total, 17497 * 133);
    }

    #[test]
    fn role_counts_follow_part_formulas() {
        let con = build_wpe_instance(&single_clause(), 1, Variant::Free).unwrap();
        let counted: u64 = con.roles.iter().filter(|(r, _)| matches!(r, Role::Var { part: 1, .. })).map(|r| r.1).sum();
        assert_eq!(counted, con.variable_part_len());
        assert_eq!(con.variable_part_len(), 1 + 131 + 1 + 2 + 129 + 1);
        let total: u64 = con.roles.iter().map(|r| r.1).sum();
        assert_eq!(total, con.instance.n());
        let counts = con.role_counts();
        assert!(counts.contains(&("var-determining", 1)));
        assert!(counts.contains(&("disj-selecting", 15)));
        assert!(counts.contains(&("floor", 133)));
        assert!(counts.contains(&("filler", con.filler_len)));
    }

    #[test]
    fn witness_for_each_assignment() {
        let f = single_clause();
        for v in Variant::ALL {
            let con = build_wpe_instance(&f, 1, v).unwrap();
            for a in [[1], [2]] {
                let w = build_emulation_witness(&con, &Assignment::from_vars(a)).unwrap();
                let r = check_uniform_emulation(&con.instance, &w).unwrap();
                assert!(r.is_valid(), "{v} {a:?}: {:?}", r.violation);
            }
        }
    }

    #[test]
    fn determining_vertex_lands_on_selected_column() {
        let con = build_wpe_instance(&single_clause(), 1, Variant::Free).unwrap();
        let w = build_emulation_witness(&con, &Assignment::from_vars([2])).unwrap();
        let mut idx = 1;
        for (r, n) in &con.roles {
            if matches!(r, Role::Var { sub: VarRole::Determining, .. }) {
                // column n + 1 + j selects x_j; here n = 2, j = 2
                assert_eq!(w.get(idx), Some(5));
            }
            idx += n;
        }
    }

    #[test]
    fn assignment_gate() {
        let f = parse_formula("(and (or x1))").unwrap().with_num_vars(2).unwrap();
        let con = build_wpe_instance(&f, 1, Variant::Free).unwrap();
        assert_eq!(
            build_emulation_witness(&con, &Assignment::from_vars([2])).unwrap_err(),
            ReductionError::AssignmentNotSatisfying
        );
        assert!(matches!(
            build_emulation_witness(&con, &Assignment::from_vars([1, 2])),
            Err(ReductionError::AssignmentSize { expected: 1, got: 2 })
        ));
        assert!(matches!(
            build_emulation_witness(&con, &Assignment::from_vars([3])),
            Err(ReductionError::AssignmentRange { var: 3, n: 2 })
        ));
    }

    #[test]
    fn reduction_rejects_degenerate_inputs() {
        let f = parse_formula("(and x1 x2)").unwrap();
        assert!(matches!(build_wpe_instance(&f, 1, Variant::Free), Err(ReductionError::NoDisjunction)));
        assert!(matches!(
            build_wpe_instance(&single_clause(), 3, Variant::Free),
            Err(ReductionError::KExceedsN { k: 3, n: 2 })
        ));
    }

    #[test]
    fn fold_examples() {
        assert_eq!(fold_path(1, 4, 3, FoldDirection::Right).unwrap(), vec![2, 3, 4]);
        assert_eq!(fold_path(1, 4, 2, FoldDirection::Right).unwrap(), vec![2, 3]);
        assert_eq!(fold_path(5, 5, 2, FoldDirection::Right).unwrap(), vec![6, 6]);
        assert_eq!(fold_path(5, 5, 2, FoldDirection::Left).unwrap(), vec![4, 4]);
        assert_eq!(fold_path(1, 3, 5, FoldDirection::Right).unwrap(), vec![2, 3, 4, 5, 4]);
        assert_eq!(fold_path(6, 3, 4, FoldDirection::Right).unwrap(), vec![7, 6, 5, 4]);
        assert_eq!(fold_path(3, 6, 4, FoldDirection::Left).unwrap(), vec![2, 3, 4, 5]);
        assert!(matches!(fold_path(1, 5, 2, FoldDirection::Right), Err(FoldError::TooShort { .. })));
        assert!(matches!(fold_path(1, 1, 3, FoldDirection::Left), Err(FoldError::OutOfRange { .. })));
    }

    #[test]
    fn padding_keeps_satisfiability() {
        let f = parse_formula("(and (or x1 (not x2)) (or x2))").unwrap();
        let (g, k) = pad_for_strong_np(&f).unwrap();
        assert_eq!((g.num_vars(), k), (4, 2));
        let a = pad_assignment(&Assignment::from_vars([1, 2]), 2);
        assert_eq!(a, Assignment::from_vars([1, 2]));
        let b = pad_assignment(&Assignment::from_vars([2, 1]), 2);
        assert!(g.evaluate(&b));
    }
}
