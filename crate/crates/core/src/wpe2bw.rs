//! Weighted path emulation with `f(1) = M` to bandwidth of caterpillars with
//! hairs of length at most three: the construction, the bandwidth-`k`
//! layout built from a uniform emulation, and the way back.

use std::ops::Range;

use thiserror::Error;

use crate::graph::{bandwidth_of_layout, Graph, GraphError, Layout, LayoutError, RoleTable, VertexRole};
use crate::slots::SlotBoard;
use crate::wpe::{check_uniform_emulation, EmulationMap, EmulationReport, End, InstanceError, MalformedMap, Pins, Violation, WpeInstance};

/// Builds refuse caterpillars with more vertices than this unless told otherwise.
pub const DEFAULT_MAX_VERTICES: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("instance must have pins {expected}")]
    Pins { expected: &'static str },
    #[error("emulation factor {c} is at most 6; normalize first")]
    SmallFactor { c: u64 },
    #[error("arithmetic overflow in construction constants")]
    Overflow,
    #[error("non-turning vertex count {alpha} exceeds the room {room}")]
    AlphaTooLarge { alpha: u64, room: u64 },
    #[error("construction would have {vertices} vertices, above the limit {limit}")]
    TooLarge { vertices: u64, limit: u64 },
    #[error("closed-form count {formula} disagrees with recount {recount}")]
    AlphaMismatch { formula: u64, recount: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Multiplies weights and `c` by 7 when `c <= 6`.
pub fn normalize_factor(inst: &WpeInstance) -> Result<WpeInstance, InstanceError> {
    if inst.c() <= 6 {
        inst.scaled(7)
    } else {
        Ok(inst.clone())
    }
}

/// Constants of the construction, available without building the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaterpillarConstants {
    pub m: u64,
    pub n: u64,
    pub c: u64,
    pub b: u64,
    pub k: u64,
    /// Vertices outside the turning point and filler, closed form.
    pub alpha: u64,
    pub filler_len: u64,
    pub vertices: u64,
}

impl CaterpillarConstants {
    pub fn new(inst: &WpeInstance) -> Result<Self, BuildError> {
        let (m, n, c) = (inst.m(), inst.n(), inst.c());
        if c <= 6 {
            return Err(BuildError::SmallFactor { c });
        }
        let of = || BuildError::Overflow;
        let b = c.checked_mul(12).and_then(|x| x.checked_add(6)).ok_or_else(of)?;
        let k = b.checked_mul(9).and_then(|x| x.checked_mul(c)).and_then(|x| x.checked_add(b)).ok_or_else(of)?;
        let (m1, n1, c1, b1, k1) = (m as u128, n as u128, c as u128, b as u128, k as u128);
        // p_0 with hairs, p_1..p_{5M-4}, floor hairs, gadget spine, gadget hairs
        let alpha = 2 * k1 + (5 * m1 - 4) + 4 * (m1 - 1) * (k1 - b1) + (6 * n1 - 5) + 9 * b1 * c1 * m1;
        let room = (5 * m1 - 2) * k1 - 1;
        let vertices = (5 * m1 + 4) * k1;
        if vertices > u64::MAX as u128 {
            return Err(of());
        }
        if alpha > room {
            return Err(BuildError::AlphaTooLarge { alpha: alpha as u64, room: room as u64 });
        }
        Ok(CaterpillarConstants {
            m,
            n,
            c,
            b,
            k,
            alpha: alpha as u64,
            filler_len: (room - alpha) as u64,
            vertices: vertices as u64,
        })
    }

    /// Non-turning-point vertices, which fill positions `1..(5M-2)k-1`.
    pub fn non_turning(&self) -> u64 {
        (5 * self.m - 2) * self.k - 1
    }

    /// Position of `p_i` in the witness layout.
    pub fn floor_pos(&self, i: u64) -> u64 {
        (i + 1) * self.k + 1
    }
}

/// The caterpillar with its roles and vertex id ranges for every part.
#[derive(Debug, Clone)]
pub struct CaterpillarConstruction {
    pub instance: WpeInstance,
    pub constants: CaterpillarConstants,
    pub graph: Graph,
    pub roles: RoleTable,
    /// `p_0..p_{5M-3}`; the last one is the turning-point vertex `v_a`.
    pub floor: Vec<u32>,
    /// `v_a..v_g`.
    pub turn: [u32; 7],
    /// `y_1..y_{6N-5}`.
    pub gadget: Vec<u32>,
    pub filler: Vec<u32>,
    pub barrier_hairs: Range<u32>,
    /// `(floor index, hair ids)` for each floor vertex carrying hairs.
    pub floor_hairs: Vec<(u64, Range<u32>)>,
    pub c_leaves: Range<u32>,
    pub f_leaves: Range<u32>,
    /// Length-three hairs of `v_d`, listed from the attachment outward.
    pub d_hairs: Vec<[u32; 3]>,
    /// Hairs of `y_{6i-5}`, indexed by `i - 1`.
    pub gadget_hairs: Vec<Range<u32>>,
    /// Vertices outside the turning point and filler, counted from the roles.
    pub alpha_recount: u64,
}

pub(crate) struct Ids {
    pub(crate) next: u32,
    pub(crate) roles: Vec<Option<VertexRole>>,
}

impl Ids {
    pub(crate) fn one(&mut self, r: VertexRole) -> u32 {
        self.roles.push(Some(r));
        self.next += 1;
        self.next - 1
    }

    pub(crate) fn many(&mut self, count: u64, r: VertexRole) -> Range<u32> {
        let start = self.next;
        for _ in 0..count {
            self.one(r);
        }
        start..self.next
    }
}

pub fn build_caterpillar(inst: &WpeInstance) -> Result<CaterpillarConstruction, BuildError> {
    build_caterpillar_capped(inst, DEFAULT_MAX_VERTICES)
}

pub fn build_caterpillar_capped(inst: &WpeInstance, max_vertices: u64) -> Result<CaterpillarConstruction, BuildError> {
    if inst.pins() != (Pins { first: Some(End::M), last: None }) {
        return Err(BuildError::Pins { expected: "first=M" });
    }
    let con = CaterpillarConstants::new(inst)?;
    if con.vertices > max_vertices.min(u32::MAX as u64) {
        return Err(BuildError::TooLarge { vertices: con.vertices, limit: max_vertices });
    }
    let (m, n, k, b) = (con.m, con.n, con.k, con.b);
    let mut ids = Ids { next: 0, roles: Vec::with_capacity(con.vertices as usize) };
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(con.vertices as usize);

    let last_floor = 5 * m - 3;
    let mut floor: Vec<u32> = (0..last_floor).map(|i| ids.one(VertexRole::Floor(i as u32))).collect();
    let mut turn = [0u32; 7];
    for (slot, name) in turn.iter_mut().zip('a'..='g') {
        *slot = ids.one(VertexRole::Turn(name));
    }
    floor.push(turn[0]);
    for w in floor.windows(2) {
        edges.push((w[0], w[1]));
    }
    for w in turn.windows(2) {
        edges.push((w[0], w[1]));
    }
    let gadget: Vec<u32> = (1..=6 * n - 5).map(|j| ids.one(VertexRole::Gadget(j as u32))).collect();
    edges.push((turn[6], gadget[0]));
    for w in gadget.windows(2) {
        edges.push((w[0], w[1]));
    }

    let barrier_hairs = ids.many(2 * k - 1, VertexRole::FloorHair(0));
    edges.extend(barrier_hairs.clone().map(|h| (floor[0], h)));
    let mut floor_hairs = Vec::new();
    for i in 1..m {
        for j in [5 * i - 2, 5 * i] {
            let hairs = ids.many(2 * k - 2 * b, VertexRole::FloorHair(j as u32));
            edges.extend(hairs.clone().map(|h| (floor[j as usize], h)));
            floor_hairs.push((j, hairs));
        }
    }
    let mut gadget_hairs = Vec::with_capacity(n as usize);
    for (i, w) in inst.weights().enumerate() {
        let y = 6 * i as u32;
        let hairs = ids.many(9 * b * w, VertexRole::GadgetHair(y + 1));
        edges.extend(hairs.clone().map(|h| (gadget[y as usize], h)));
        gadget_hairs.push(hairs);
    }

    let leaves = 3 * (k - 2) / 2;
    let c_leaves = ids.many(leaves, VertexRole::TurnHair { at: 'c', depth: 1 });
    edges.extend(c_leaves.clone().map(|h| (turn[2], h)));
    let f_leaves = ids.many(leaves, VertexRole::TurnHair { at: 'f', depth: 1 });
    edges.extend(f_leaves.clone().map(|h| (turn[5], h)));
    let mut d_hairs = Vec::with_capacity(k as usize);
    for _ in 0..k {
        let h = [1, 2, 3].map(|depth| ids.one(VertexRole::TurnHair { at: 'd', depth }));
        edges.extend([(turn[3], h[0]), (h[0], h[1]), (h[1], h[2])]);
        d_hairs.push(h);
    }

    let filler: Vec<u32> = (1..=con.filler_len).map(|i| ids.one(VertexRole::Filler(i as u32))).collect();
    if let Some(&first) = filler.first() {
        edges.push((*gadget.last().expect("gadget is nonempty"), first));
    }
    for w in filler.windows(2) {
        edges.push((w[0], w[1]));
    }

    let total = ids.roles.len();
    debug_assert_eq!(total as u64, con.vertices);
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
    Ok(CaterpillarConstruction {
        instance: inst.clone(),
        constants: con,
        graph: Graph::new(total, edges)?,
        roles,
        floor,
        turn,
        gadget,
        filler,
        barrier_hairs,
        floor_hairs,
        c_leaves,
        f_leaves,
        d_hairs,
        gadget_hairs,
        alpha_recount,
    })
}

/// Counts vertices by role: those outside the turning point and filler.
pub fn recount_alpha(roles: &RoleTable) -> u64 {
    roles
        .iter()
        .filter(|(_, r)| !matches!(r, VertexRole::Turn(_) | VertexRole::TurnHair { .. } | VertexRole::Filler(_) | VertexRole::Fan))
        .count() as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Map(#[from] MalformedMap),
    #[error("map is not a uniform emulation: {0}")]
    NotEmulation(Violation),
    #[error("map must satisfy the instance pins")]
    Pins,
    #[error("no free slot for {what} (claim {claim})")]
    NoSlot { what: String, claim: &'static str },
    #[error("{what} lands at distance {distance} > k (claim {claim})")]
    Stretch { what: String, distance: u64, claim: &'static str },
    #[error("interval {interval} holds {count} gadget vertices, above {bound} (claim used)")]
    Crowded { interval: u64, count: u64, bound: u64 },
    #[error("filler path has {filler} vertices but {free} positions remain")]
    FillerCount { filler: u64, free: u64 },
    #[error("slot {pos} is already taken")]
    Conflict { pos: u64 },
    #[error("layout has bandwidth {bandwidth} > k = {k}")]
    Bandwidth { bandwidth: u64, k: u64 },
    #[error(transparent)]
    Layout(#[from] LayoutError),
}

pub(crate) fn check_map(inst: &WpeInstance, f: &EmulationMap) -> Result<(), WitnessError> {
    let report = check_uniform_emulation(inst, f)?;
    match report.violation {
        None => Ok(()),
        Some(Violation::Pin { .. }) => Err(WitnessError::Pins),
        Some(v) => Err(WitnessError::NotEmulation(v)),
    }
}

/// Layout under construction: positions by vertex plus the slot board.
pub(crate) struct Placement {
    pub(crate) board: SlotBoard,
    pub(crate) pos: Vec<u32>,
}

impl Placement {
    pub(crate) fn new(vertices: usize) -> Self {
        Placement { board: SlotBoard::new(vertices as u32), pos: vec![0; vertices] }
    }

    pub(crate) fn put(&mut self, v: u32, p: u64) -> Result<(), WitnessError> {
        self.board.occupy(p as u32, v).map_err(|_| WitnessError::Conflict { pos: p })?;
        self.pos[v as usize] = p as u32;
        Ok(())
    }

    pub(crate) fn at(&self, v: u32) -> u64 {
        self.pos[v as usize] as u64
    }

    /// Puts `v` at the first free unreserved slot of the open interval `(lo, hi)`.
    pub(crate) fn first_in(&mut self, v: u32, lo: u64, hi: u64, what: impl FnOnce() -> String, claim: &'static str) -> Result<u64, WitnessError> {
        match self.board.next_available(lo as u32 + 1) {
            Some(p) if (p as u64) < hi => {
                self.put(v, p as u64)?;
                Ok(p as u64)
            }
            _ => Err(WitnessError::NoSlot { what: what(), claim }),
        }
    }

    /// Fills all positions left open, walking right to left, with `rest`.
    pub(crate) fn descend(&mut self, rest: &[u32]) -> Result<(), WitnessError> {
        let mut cur = self.board.n();
        for &v in rest {
            match self.board.prev_unused(cur) {
                Some(p) => {
                    self.put(v, p as u64)?;
                    cur = p;
                }
                None => {
                    let free = self.board.owners().iter().filter(|&&o| o == crate::slots::NONE).count() as u64;
                    return Err(WitnessError::FillerCount { filler: rest.len() as u64, free });
                }
            }
        }
        let free = self.board.owners().iter().filter(|&&o| o == crate::slots::NONE).count() as u64;
        if free > 0 {
            return Err(WitnessError::FillerCount { filler: rest.len() as u64, free: free + rest.len() as u64 });
        }
        Ok(())
    }

    pub(crate) fn into_layout(self) -> Result<Layout, WitnessError> {
        Ok(Layout::from_positions(self.pos)?)
    }
}

/// Counts gadget vertices per floor interval, failing above `bound`.
pub(crate) fn check_crowding(pl: &Placement, spine: &[u32], k: u64, intervals: u64, bound: u64) -> Result<(), WitnessError> {
    let mut counts = vec![0u64; intervals as usize + 1];
    for &y in spine {
        let p = pl.at(y);
        if p > k + 1 {
            let i = (p - k - 2) / k;
            if i <= intervals {
                counts[i as usize] += 1;
            }
        }
    }
    match counts.iter().enumerate().find(|(_, &c)| c > bound) {
        Some((i, &count)) => Err(WitnessError::Crowded { interval: i as u64, count, bound }),
        None => Ok(()),
    }
}

/// Builds a layout of bandwidth at most `k` from a uniform emulation.
pub fn build_layout_witness(con: &CaterpillarConstruction, f: &EmulationMap) -> Result<Layout, WitnessError> {
    check_map(&con.instance, f)?;
    let cs = &con.constants;
    let (m, k) = (cs.m, cs.k);
    let g = |i: u64| cs.floor_pos(i);
    let mut pl = Placement::new(con.graph.n());

    for (i, &p) in con.floor.iter().enumerate() {
        pl.put(p, g(i as u64))?;
    }
    let hair_slots = (1..=2 * k).filter(|&q| q != k + 1);
    for (h, q) in con.barrier_hairs.clone().zip(hair_slots) {
        pl.put(h, q)?;
    }
    place_turning_point(con, &mut pl)?;
    for i in 1..=5 * m - 4 {
        pl.board.reserve(g(i) as u32 + 1);
        if i >= 2 {
            pl.board.reserve(g(i) as u32 - 1);
        }
    }

    let gap = |i: u64| (g(5 * i - 4), g(5 * i - 3));
    let targets = f.to_vec();
    for (i, &col) in targets.iter().enumerate() {
        let (lo, hi) = gap(col);
        let y = con.gadget[6 * i];
        pl.first_in(y, lo, hi, || format!("y{}", 6 * i + 1), "hairsingap")?;
    }
    for i in 0..targets.len().saturating_sub(1) {
        let (from, to) = (targets[i], targets[i + 1]);
        let mut cur = pl.at(con.gadget[6 * i]);
        for j in 6 * i + 1..6 * i + 6 {
            let y = con.gadget[j];
            let name = || format!("y{}", j + 1);
            if from == to {
                let (lo, hi) = gap(from);
                cur = pl.first_in(y, lo, hi, name, "used")?;
                continue;
            }
            let step = if to > from {
                pl.board.prev_available((cur + k) as u32).filter(|&p| p as u64 > cur)
            } else {
                pl.board.next_available(cur.saturating_sub(k) as u32).filter(|&p| (p as u64) < cur)
            };
            let p = step.ok_or_else(|| WitnessError::NoSlot { what: name(), claim: "4.4" })? as u64;
            pl.put(y, p)?;
            cur = p;
        }
        let next = pl.at(con.gadget[6 * i + 6]);
        if next.abs_diff(cur) > k {
            return Err(WitnessError::Stretch { what: format!("y{}", 6 * i + 7), distance: next.abs_diff(cur), claim: "4.4" });
        }
    }
    check_crowding(&pl, &con.gadget, k, 5 * m - 4, 11 * cs.c)?;

    // filler climbs along the reserved slots left of p_{5i-3}, p_{5i+2}, ...
    let last_col = *targets.last().expect("map is nonempty");
    let mut climbed = 0;
    if last_col < m {
        let mut q = g(5 * last_col - 3) - 1;
        while q <= g(5 * m - 4) - 1 {
            let v = *con.filler.get(climbed).ok_or(WitnessError::FillerCount { filler: con.filler.len() as u64, free: 0 })?;
            pl.put(v, q)?;
            climbed += 1;
            q += k;
        }
    }

    for (j, hairs) in &con.floor_hairs {
        let half = (hairs.end - hairs.start) / 2;
        for (t, h) in hairs.clone().enumerate() {
            let (lo, hi) = if (t as u32) < half { (g(j - 1), g(*j)) } else { (g(*j), g(j + 1)) };
            pl.first_in(h, lo, hi, || format!("p{j}-hair"), "used")?;
        }
    }
    for (i, hairs) in con.gadget_hairs.iter().enumerate() {
        let (lo, hi) = gap(targets[i]);
        for h in hairs.clone() {
            pl.first_in(h, lo, hi, || format!("y{}-hair", 6 * i + 1), "hairsingap")?;
        }
    }
    pl.descend(&con.filler[climbed..])?;

    let layout = pl.into_layout()?;
    let bandwidth = bandwidth_of_layout(&con.graph, &layout)?;
    if bandwidth > k {
        return Err(WitnessError::Bandwidth { bandwidth, k });
    }
    Ok(layout)
}

/// The turning point, right of `(5M-2)k`: `v_g` just left of `v_a`, then the
/// leaves of `v_f` and `v_c` interleaved with `v_b, v_e`, then `v_d` and its
/// long hairs one layer per block of `k`.
fn place_turning_point(con: &CaterpillarConstruction, pl: &mut Placement) -> Result<(), WitnessError> {
    let k = con.constants.k;
    let a = con.constants.floor_pos(5 * con.constants.m - 3);
    let [_, vb, vc, vd, ve, vf, vg] = con.turn;
    pl.put(vg, a - 1)?;
    pl.put(vf, a + k - 1)?;
    pl.put(vb, a + k)?;
    pl.put(ve, a + 2 * k - 1)?;
    pl.put(vc, a + 2 * k)?;
    pl.put(vd, a + 3 * k - 1)?;
    let mut f_slots = (1..=k - 2).chain(k + 1..k / 2 + k);
    for h in con.f_leaves.clone() {
        pl.put(h, a + f_slots.next().expect("slot count matches"))?;
    }
    let mut c_slots = (k / 2 + k..=2 * k - 2).chain(2 * k + 1..=3 * k - 2);
    for h in con.c_leaves.clone() {
        pl.put(h, a + c_slots.next().expect("slot count matches"))?;
    }
    for (j, h) in con.d_hairs.iter().enumerate() {
        for (layer, &v) in h.iter().enumerate() {
            pl.put(v, a + (3 + layer as u64) * k + j as u64)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error(transparent)]
    Layout(#[from] LayoutError),
    #[error("layout has bandwidth {bandwidth} > k = {k}")]
    Bandwidth { bandwidth: u64, k: u64 },
    #[error("y{gadget} at position {pos} lies in no enlarged gap (claim gap1 refuted)")]
    OutsideGaps { gadget: u64, pos: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    pub map: EmulationMap,
    pub report: EmulationReport,
}

/// Reads an emulation off a layout of bandwidth at most `k`, sending
/// `y_{6j-5}` to the enlarged gap it lies in.
pub fn extract_emulation(con: &CaterpillarConstruction, layout: &Layout) -> Result<Extraction, ExtractError> {
    let k = con.constants.k;
    let bandwidth = bandwidth_of_layout(&con.graph, layout)?;
    if bandwidth > k {
        return Err(ExtractError::Bandwidth { bandwidth, k });
    }
    let flip = layout.position(con.floor[0]) > layout.position(con.turn[0]);
    let n = layout.len() as u64;
    let at = |v: u32| {
        let p = layout.position(v) as u64;
        if flip {
            n + 1 - p
        } else {
            p
        }
    };
    let m = con.constants.m;
    let gaps: Vec<(u64, u64)> = (1..=m)
        .map(|i| {
            let hi = if i < m { 5 * i - 2 } else { 5 * m - 3 };
            (at(con.floor[5 * i as usize - 5]), at(con.floor[hi as usize]))
        })
        .collect();
    let mut map = EmulationMap::new();
    for j in 0..con.instance.n() as usize {
        let y = at(con.gadget[6 * j]);
        let col = gaps
            .iter()
            .position(|&(lo, hi)| lo < y && y < hi)
            .ok_or(ExtractError::OutsideGaps { gadget: 6 * j as u64 + 1, pos: y })?;
        map.push(col as u64 + 1);
    }
    let report = check_uniform_emulation(&con.instance, &map).expect("map has one entry per vertex, all in range");
    Ok(Extraction { map, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_caterpillar;
    use crate::wpe::{solve_wpe_brute, Pins};
    use crate::SearchLimits;

    fn fig() -> WpeInstance {
        let pins = Pins { first: Some(End::M), last: None };
        normalize_factor(&WpeInstance::new(&[2, 1, 2, 1], 3, 2, pins).unwrap()).unwrap()
    }

    #[test]
    fn normalization() {
        let i = fig();
        assert_eq!(i.c(), 14);
        assert_eq!(i.weights().collect::<Vec<_>>(), vec![14, 7, 14, 7]);
        assert_eq!(normalize_factor(&i).unwrap(), i);
        let seven = WpeInstance::new(&[7], 1, 7, Pins::FREE).unwrap();
        assert_eq!(normalize_factor(&seven).unwrap(), seven);
    }

    #[test]
    fn constants_of_fig_example() {
        let c = CaterpillarConstants::new(&fig()).unwrap();
        assert_eq!((c.b, c.k), (174, 22098));
        assert_eq!(c.k % 2, 0);
        assert_eq!(c.non_turning(), 287273);
        assert_eq!(c.alpha, 285390);
        assert_eq!(c.filler_len, 1883);
        assert_eq!(c.vertices, 19 * 22098);
    }

    #[test]
    fn fig_example_round_trip() {
        let inst = fig();
        let con = build_caterpillar(&inst).unwrap();
        assert_eq!(recount_alpha(&con.roles), con.constants.alpha);
        assert_eq!(con.floor_hairs[0].1.len() as u64, 43848);
        assert_eq!(con.gadget_hairs[0].len(), 21924);
        let info = validate_caterpillar(&con.graph).unwrap();
        assert_eq!(info.max_hair_len(), 3);
        for h in info.hairs.iter().filter(|h| h.len == 3) {
            assert_eq!(h.attach, con.turn[3]);
        }

        let f = solve_wpe_brute(&inst, SearchLimits::default()).unwrap().unwrap();
        let layout = build_layout_witness(&con, &f).unwrap();
        let k = con.constants.k;
        assert_eq!(layout.position(con.floor[0]) as u64, k + 1);
        assert_eq!(layout.position(con.turn[6]) as u64, 13 * k);
        assert_eq!(layout.position(con.turn[0]) as u64, 13 * k + 1);
        let got = extract_emulation(&con, &layout).unwrap();
        assert!(got.report.is_valid());
        assert_eq!(got.map, f);
        let mirrored = extract_emulation(&con, &layout.mirrored()).unwrap();
        assert_eq!(mirrored.map, f);
    }

    #[test]
    fn rejects_bad_inputs() {
        let free = WpeInstance::new(&[14, 7, 14, 7], 3, 14, Pins::FREE).unwrap();
        assert!(matches!(build_caterpillar(&free), Err(BuildError::Pins { .. })));
        let small = WpeInstance::new(&[2, 1, 2, 1], 3, 2, Pins { first: Some(End::M), last: None }).unwrap();
        assert_eq!(build_caterpillar(&small).unwrap_err(), BuildError::SmallFactor { c: 2 });
        assert!(matches!(build_caterpillar_capped(&fig(), 1000), Err(BuildError::TooLarge { .. })));

        let con = build_caterpillar(&fig()).unwrap();
        let wrong = EmulationMap::from_positions(&[1, 2, 3, 2]);
        assert_eq!(build_layout_witness(&con, &wrong), Err(WitnessError::Pins));
        let identity = Layout::identity(con.graph.n());
        assert!(matches!(extract_emulation(&con, &identity), Err(ExtractError::Bandwidth { .. })));
    }
}
