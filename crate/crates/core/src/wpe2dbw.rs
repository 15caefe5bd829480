//! Weighted path emulation with `f(1) = f(N) = M` to directed bandwidth of
//! acyclic digraphs whose underlying graph is a caterpillar with hairs of
//! length one, and the topological-order witness.

use std::ops::Range;

use crate::graph::{directed_bandwidth_of_order, Digraph, DirectedStretch, Layout, RoleTable, VertexRole};
use crate::wpe::{EmulationMap, End, Pins, WpeInstance};
use crate::wpe2bw::{check_crowding, check_map, recount_alpha, BuildError, Ids, Placement, WitnessError, DEFAULT_MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DagConstants {
    pub m: u64,
    pub n: u64,
    pub c: u64,
    pub b: u64,
    pub k: u64,
    /// Vertices outside the fan and filler, closed form.
    pub alpha: u64,
    pub filler_len: u64,
    pub vertices: u64,
}

impl DagConstants {
    pub fn new(inst: &WpeInstance) -> Result<Self, BuildError> {
        let (m, n, c) = (inst.m(), inst.n(), inst.c());
        if c <= 6 {
            return Err(BuildError::SmallFactor { c });
        }
        let of = || BuildError::Overflow;
        let b = c.checked_mul(24).and_then(|x| x.checked_add(6)).ok_or_else(of)?;
        let k = b.checked_mul(9).and_then(|x| x.checked_mul(c)).and_then(|x| x.checked_add(b)).ok_or_else(of)?;
        let (m1, n1, c1, b1, k1) = (m as u128, n as u128, c as u128, b as u128, k as u128);
        // p_0 with hairs, p_1..p_{5M-3}, floor hairs, y and z spine, gadget hairs
        let alpha = 2 * k1 + (5 * m1 - 3) + 4 * (m1 - 1) * (k1 - b1) + (12 * n1 - 11) + 9 * b1 * c1 * m1;
        let room = (5 * m1 - 2) * k1 + 1;
        let vertices = room + k1;
        if vertices > u64::MAX as u128 {
            return Err(of());
        }
        if alpha > room {
            return Err(BuildError::AlphaTooLarge { alpha: alpha as u64, room: room as u64 });
        }
        Ok(DagConstants { m, n, c, b, k, alpha: alpha as u64, filler_len: (room - alpha) as u64, vertices: vertices as u64 })
    }

    pub fn floor_pos(&self, i: u64) -> u64 {
        (i + 1) * self.k + 1
    }
}

#[derive(Debug, Clone)]
pub struct DagConstruction {
    pub instance: WpeInstance,
    pub constants: DagConstants,
    pub digraph: Digraph,
    pub roles: RoleTable,
    /// `p_0..p_{5M-3}`.
    pub floor: Vec<u32>,
    pub fan: Range<u32>,
    /// `y_1..y_{6N-5}`.
    pub gadget: Vec<u32>,
    /// `z_j` sits between `y_j` and `y_{j+1}`.
    pub subdivision: Vec<u32>,
    pub filler: Vec<u32>,
    pub barrier_in: Range<u32>,
    pub barrier_out: Range<u32>,
    /// `(floor index, in-hairs, out-hairs)`.
    pub floor_hairs: Vec<(u64, Range<u32>, Range<u32>)>,
    pub gadget_hairs: Vec<Range<u32>>,
    pub alpha_recount: u64,
}

pub fn build_dag(inst: &WpeInstance) -> Result<DagConstruction, BuildError> {
    build_dag_capped(inst, DEFAULT_MAX_VERTICES)
}

pub fn build_dag_capped(inst: &WpeInstance, max_vertices: u64) -> Result<DagConstruction, BuildError> {
    if inst.pins() != (Pins { first: Some(End::M), last: Some(End::M) }) {
        return Err(BuildError::Pins { expected: "first=M last=M" });
    }
    let con = DagConstants::new(inst)?;
    if con.vertices > max_vertices.min(u32::MAX as u64) {
        return Err(BuildError::TooLarge { vertices: con.vertices, limit: max_vertices });
    }
    let (m, n, k, b) = (con.m, con.n, con.k, con.b);
    let mut ids = Ids { next: 0, roles: Vec::with_capacity(con.vertices as usize) };
    let mut arcs: Vec<(u32, u32)> = Vec::with_capacity(con.vertices as usize + 6 * n as usize);

    let floor: Vec<u32> = (0..=5 * m - 3).map(|i| ids.one(VertexRole::Floor(i as u32))).collect();
    for w in floor.windows(2) {
        arcs.push((w[0], w[1]));
    }
    let top = *floor.last().expect("floor is nonempty");
    let fan = ids.many(k, VertexRole::Fan);
    arcs.extend(fan.clone().map(|v| (top, v)));

    let gadget: Vec<u32> = (1..=6 * n - 5).map(|j| ids.one(VertexRole::Gadget(j as u32))).collect();
    let subdivision: Vec<u32> = (1..6 * n - 5).map(|j| ids.one(VertexRole::Subdivision(j as u32))).collect();
    arcs.push((gadget[0], top));
    for (j, &z) in subdivision.iter().enumerate() {
        arcs.push((gadget[j], z));
        arcs.push((gadget[j + 1], z));
    }

    let barrier_in = ids.many(k, VertexRole::FloorHair(0));
    let barrier_out = ids.many(k - 1, VertexRole::FloorHair(0));
    arcs.extend(barrier_in.clone().map(|h| (h, floor[0])));
    arcs.extend(barrier_out.clone().map(|h| (floor[0], h)));
    let mut floor_hairs = Vec::new();
    for i in 1..m {
        for j in [5 * i - 2, 5 * i] {
            let p = floor[j as usize];
            let hin = ids.many(k - b, VertexRole::FloorHair(j as u32));
            let hout = ids.many(k - b, VertexRole::FloorHair(j as u32));
            arcs.extend(hin.clone().map(|h| (h, p)));
            arcs.extend(hout.clone().map(|h| (p, h)));
            floor_hairs.push((j, hin, hout));
        }
    }
    let mut gadget_hairs = Vec::with_capacity(n as usize);
    for (i, w) in inst.weights().enumerate() {
        let y = gadget[6 * i];
        let hairs = ids.many(9 * b * w, VertexRole::GadgetHair(6 * i as u32 + 1));
        arcs.extend(hairs.clone().map(|h| (y, h)));
        gadget_hairs.push(hairs);
    }

    let filler: Vec<u32> = (1..=con.filler_len).map(|i| ids.one(VertexRole::Filler(i as u32))).collect();
    if let Some(&first) = filler.first() {
        arcs.push((first, *gadget.last().expect("gadget is nonempty")));
    }
    for (i, w) in filler.windows(2).enumerate() {
        arcs.push(if i == 0 { (w[0], w[1]) } else { (w[1], w[0]) });
    }

    let total = ids.roles.len();
    let mut roles = RoleTable::new(total);
    for (v, r) in ids.roles.into_iter().enumerate() {
        if let Some(r) = r {
            roles.set(v as u32, r);
        }
    }
    let alpha_recount = recount_alpha(&roles);
    if alpha_recount != con.alpha {
        return Err(BuildError::AlphaMismatch { formula: con.alpha, recount: alpha_recount });
    }
    let digraph = Digraph::new(total, arcs)?;
    if !digraph.is_acyclic() {
        return Err(BuildError::Graph(crate::graph::GraphError::Cyclic));
    }
    Ok(DagConstruction {
        instance: inst.clone(),
        constants: con,
        digraph,
        roles,
        floor,
        fan,
        gadget,
        subdivision,
        filler,
        barrier_in,
        barrier_out,
        floor_hairs,
        gadget_hairs,
        alpha_recount,
    })
}

/// Builds a topological order with directed bandwidth at most `k`.
pub fn build_order_witness(con: &DagConstruction, f: &EmulationMap) -> Result<Layout, WitnessError> {
    check_map(&con.instance, f)?;
    let cs = &con.constants;
    let (m, k) = (cs.m, cs.k);
    let g = |i: u64| cs.floor_pos(i);
    let top = g(5 * m - 3);
    let mut pl = Placement::new(con.digraph.n());

    for (i, &p) in con.floor.iter().enumerate() {
        pl.put(p, g(i as u64))?;
    }
    for (h, q) in con.barrier_in.clone().zip(1..=k) {
        pl.put(h, q)?;
    }
    for (h, q) in con.barrier_out.clone().zip(k + 2..=2 * k) {
        pl.put(h, q)?;
    }
    for (v, q) in con.fan.clone().zip(top + 1..) {
        pl.put(v, q)?;
    }
    for i in 1..=5 * m - 3 {
        if i <= 5 * m - 4 {
            pl.board.reserve(g(i) as u32 + 1);
        }
        if i >= 2 {
            pl.board.reserve(g(i) as u32 - 1);
        }
    }

    let gap = |i: u64| (g(5 * i - 4), g(5 * i - 3));
    let targets = f.to_vec();
    for (i, &col) in targets.iter().enumerate() {
        let (lo, hi) = gap(col);
        pl.first_in(con.gadget[6 * i], lo, hi, || format!("y{}", 6 * i + 1), "hairsingap")?;
    }
    for i in 0..targets.len().saturating_sub(1) {
        lay_connection(con, &mut pl, i, targets[i], targets[i + 1])?;
    }
    let mut spine = con.gadget.clone();
    spine.extend(&con.subdivision);
    check_crowding(&pl, &spine, k, 5 * m - 4, 22 * cs.c)?;

    let mut rest: &[u32] = &con.filler;
    if let Some((&first, tail)) = con.filler.split_first() {
        pl.put(first, g(5 * m - 4) + 1)?;
        rest = tail;
    }
    for (j, hin, hout) in &con.floor_hairs {
        for h in hin.clone() {
            pl.first_in(h, g(j - 1), g(*j), || format!("p{j}-hair"), "used")?;
        }
        for h in hout.clone() {
            pl.first_in(h, g(*j), g(j + 1), || format!("p{j}-hair"), "used")?;
        }
    }
    for (i, hairs) in con.gadget_hairs.iter().enumerate() {
        let (lo, hi) = gap(targets[i]);
        let y = pl.at(con.gadget[6 * i]);
        for h in hairs.clone() {
            pl.first_in(h, lo.max(y), hi, || format!("y{}-hair", 6 * i + 1), "hairsingap")?;
        }
    }
    pl.descend(rest)?;

    let layout = pl.into_layout()?;
    match directed_bandwidth_of_order(&con.digraph, &layout)? {
        DirectedStretch::Feasible(bandwidth) if bandwidth <= k => Ok(layout),
        DirectedStretch::Feasible(bandwidth) => Err(WitnessError::Bandwidth { bandwidth, k }),
        DirectedStretch::Infeasible { tail, head } => Err(WitnessError::Stretch {
            what: format!("arc {} -> {}", label(con, tail), label(con, head)),
            distance: 0,
            claim: "topological order",
        }),
    }
}

fn label(con: &DagConstruction, v: u32) -> String {
    con.roles.get(v).map(|r| r.to_string()).unwrap_or_else(|| v.to_string())
}

/// Lays out `z_j, y_{j+1}, ..., z_{j+5}` between `y_j` and `y_{j+6}`, `j = 6i+1`.
/// Every `z` must land right of both its `y` neighbours.
fn lay_connection(con: &DagConstruction, pl: &mut Placement, i: usize, from: u64, to: u64) -> Result<(), WitnessError> {
    let cs = &con.constants;
    let k = cs.k;
    let base = 6 * i;
    let end = pl.at(con.gadget[base + 6]);
    let no_slot = |name: String| WitnessError::NoSlot { what: name, claim: "4.4" };
    if from == to {
        let (lo, hi) = (cs.floor_pos(5 * from - 4), cs.floor_pos(5 * from - 3));
        for j in base + 1..base + 6 {
            pl.first_in(con.gadget[j], lo, hi, || format!("y{}", j + 1), "used")?;
        }
        for j in base..base + 6 {
            let left = pl.at(con.gadget[j]).max(pl.at(con.gadget[j + 1]));
            pl.first_in(con.subdivision[j], left, hi, || format!("z{}", j + 1), "used")?;
        }
        return Ok(());
    }
    let mut cur = pl.at(con.gadget[base]);
    for t in 0..6 {
        let j = base + t;
        let last = t == 5;
        let (lo, hi) = if last { (cur.min(end), cur.max(end)) } else { (cur, cur) };
        // z must be right of both neighbours and within k of both
        let z = if to > from {
            pl.board.prev_available((lo + k) as u32).filter(|&p| p as u64 > hi)
        } else {
            pl.board.next_available(hi as u32 + 1).filter(|&p| p as u64 <= lo + k)
        };
        let z = z.ok_or_else(|| no_slot(format!("z{}", j + 1)))? as u64;
        pl.put(con.subdivision[j], z)?;
        if last {
            break;
        }
        let y = if to > from {
            pl.board.prev_available(z as u32 - 1).filter(|&p| p as u64 + k >= z)
        } else {
            pl.board.next_available(z.saturating_sub(k) as u32).filter(|&p| (p as u64) < z)
        };
        let y = y.ok_or_else(|| no_slot(format!("y{}", j + 2)))? as u64;
        pl.put(con.gadget[j + 1], y)?;
        cur = y;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_caterpillar;
    use crate::wpe::check_uniform_emulation;
    use crate::wpe2bw::normalize_factor;

    fn toy() -> WpeInstance {
        let pins = Pins { first: Some(End::M), last: Some(End::M) };
        normalize_factor(&WpeInstance::new(&[1, 1, 2, 1, 1], 3, 2, pins).unwrap()).unwrap()
    }

    #[test]
    fn constants() {
        let c = DagConstants::new(&toy()).unwrap();
        assert_eq!((c.b, c.k), (342, 43434));
        assert_eq!(c.vertices, 14 * 43434 + 1);
        assert_eq!(c.alpha, 560941);
        assert_eq!(c.filler_len, 13 * 43434 + 1 - 560941);
    }

    #[test]
    fn toy_witness() {
        let inst = toy();
        let con = build_dag(&inst).unwrap();
        assert_eq!(con.subdivision.len(), 6 * 5 - 6);
        assert_eq!(con.alpha_recount, con.constants.alpha);
        let under = con.digraph.underlying().unwrap();
        assert!(validate_caterpillar(&under).unwrap().max_hair_len() <= 1);

        let f = EmulationMap::from_positions(&[3, 2, 1, 2, 3]);
        assert!(check_uniform_emulation(&inst, &f).unwrap().is_valid());
        let order = build_order_witness(&con, &f).unwrap();
        let k = con.constants.k;
        let top = order.position(*con.floor.last().unwrap()) as u64;
        for v in con.fan.clone() {
            let p = order.position(v) as u64;
            assert!(p > top && p <= top + k);
        }
        // y_{6i-1} to y_{6i+5}: six forward arcs at most
        for j in (4..con.gadget.len() - 6).step_by(6) {
            let a = order.position(con.gadget[j]) as u64;
            let b = order.position(con.gadget[j + 6]) as u64;
            assert!(a.abs_diff(b) <= 6 * k);
        }
    }

    #[test]
    fn needs_both_pins() {
        let one = WpeInstance::new(&[7, 7, 14, 7, 7], 3, 14, Pins { first: Some(End::M), last: None }).unwrap();
        assert!(matches!(build_dag(&one), Err(BuildError::Pins { .. })));
    }
}
