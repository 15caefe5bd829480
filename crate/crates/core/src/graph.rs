//! Simple graphs and digraphs on dense integer ids, linear layouts, bandwidth
//! evaluation, vertex role labels and caterpillar recognition.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: u32 },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("digraph has a directed cycle")]
    Cyclic,
}

fn check_pairs(n: usize, pairs: &[(u32, u32)], directed: bool) -> Result<(), GraphError> {
    let mut seen = HashSet::with_capacity(pairs.len());
    for &(u, v) in pairs {
        for x in [u, v] {
            if x as usize >= n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if !seen.insert(key) {
            return Err(GraphError::DuplicateEdge { u, v });
        }
    }
    Ok(())
}

/// Compressed adjacency lists.
#[derive(Debug, Clone)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Adjacency {
    fn build(n: usize, pairs: impl Iterator<Item = (u32, u32)> + Clone) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for (u, _) in pairs.clone() {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[n]];
        for (u, v) in pairs {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
        }
        Adjacency { offsets, targets }
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        check_pairs(n, &edges, false)?;
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Adjacency {
        let both = self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
        Adjacency::build(self.n, both)
    }

    pub fn path(n: usize) -> Graph {
        Graph { n, edges: (1..n as u32).map(|i| (i - 1, i)).collect() }
    }

    pub fn star(leaves: usize) -> Graph {
        Graph { n: leaves + 1, edges: (1..=leaves as u32).map(|i| (0, i)).collect() }
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Self::path(n);
        g.edges.push((n as u32 - 1, 0));
        g
    }
}

/// Simple directed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(u32, u32)>,
}

impl Digraph {
    pub fn new(n: usize, arcs: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        check_pairs(n, &arcs, true)?;
        Ok(Digraph { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn out_adjacency(&self) -> Adjacency {
        Adjacency::build(self.n, self.arcs.iter().copied())
    }

    pub fn in_adjacency(&self) -> Adjacency {
        Adjacency::build(self.n, self.arcs.iter().map(|&(u, v)| (v, u)))
    }

    /// A topological order (Kahn, smallest ready vertex first), or `Cyclic`.
    pub fn topological_order(&self) -> Result<Vec<u32>, GraphError> {
        let out = self.out_adjacency();
        let mut indeg = vec![0usize; self.n];
        for &(_, v) in &self.arcs {
            indeg[v as usize] += 1;
        }
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<u32>> =
            (0..self.n as u32).filter(|&v| indeg[v as usize] == 0).map(std::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(std::cmp::Reverse(v)) = ready.pop() {
            order.push(v);
            for &w in out.neighbors(v) {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    ready.push(std::cmp::Reverse(w));
                }
            }
        }
        if order.len() == self.n {
            Ok(order)
        } else {
            Err(GraphError::Cyclic)
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// The underlying undirected graph; fails if two arcs join the same pair.
    pub fn underlying(&self) -> Result<Graph, GraphError> {
        Graph::new(self.n, self.arcs.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("layout covers {got} vertices, graph has {expected}")]
    Length { got: usize, expected: usize },
    #[error("position {pos} outside 1..={n}")]
    OutOfRange { pos: u32, n: usize },
    #[error("position {pos} used twice")]
    Repeated { pos: u32 },
}

/// Bijection from vertices `0..n` to positions `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layout {
    pos: Vec<u32>,
}

impl Layout {
    pub fn from_positions(pos: Vec<u32>) -> Result<Self, LayoutError> {
        let n = pos.len();
        let mut used = vec![false; n + 1];
        for &p in &pos {
            if p == 0 || p as usize > n {
                return Err(LayoutError::OutOfRange { pos: p, n });
            }
            if std::mem::replace(&mut used[p as usize], true) {
                return Err(LayoutError::Repeated { pos: p });
            }
        }
        Ok(Layout { pos })
    }

    /// Layout placing `order[i]` at position `i + 1`.
    pub fn from_order(order: &[u32]) -> Result<Self, LayoutError> {
        let n = order.len();
        let mut pos = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            if v as usize >= n {
                return Err(LayoutError::OutOfRange { pos: v + 1, n });
            }
            if pos[v as usize] != 0 {
                return Err(LayoutError::Repeated { pos: v + 1 });
            }
            pos[v as usize] = i as u32 + 1;
        }
        Ok(Layout { pos })
    }

    pub fn identity(n: usize) -> Self {
        Layout { pos: (1..=n as u32).collect() }
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }

    pub fn position(&self, v: u32) -> u32 {
        self.pos[v as usize]
    }

    pub fn positions(&self) -> &[u32] {
        &self.pos
    }

    /// Vertices in layout order.
    pub fn order(&self) -> Vec<u32> {
        let mut order = vec![0u32; self.pos.len()];
        for (v, &p) in self.pos.iter().enumerate() {
            order[p as usize - 1] = v as u32;
        }
        order
    }

    pub fn mirrored(&self) -> Layout {
        let n = self.pos.len() as u32;
        Layout { pos: self.pos.iter().map(|&p| n + 1 - p).collect() }
    }

    fn check_len(&self, n: usize) -> Result<(), LayoutError> {
        if self.pos.len() != n {
            return Err(LayoutError::Length { got: self.pos.len(), expected: n });
        }
        Ok(())
    }
}

/// Largest position difference across an edge; 0 without edges.
pub fn bandwidth_of_layout(g: &Graph, l: &Layout) -> Result<u64, LayoutError> {
    l.check_len(g.n)?;
    Ok(g.edges.iter().map(|&(u, v)| l.position(u).abs_diff(l.position(v)) as u64).max().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DirectedStretch {
    /// Every arc points forward; the value is the longest arc.
    Feasible(u64),
    /// The order is not topological: this arc points backwards.
    Infeasible { tail: u32, head: u32 },
}

pub fn directed_bandwidth_of_order(d: &Digraph, l: &Layout) -> Result<DirectedStretch, LayoutError> {
    l.check_len(d.n)?;
    let mut best = 0u64;
    for &(u, v) in &d.arcs {
        let (pu, pv) = (l.position(u), l.position(v));
        if pv < pu {
            return Ok(DirectedStretch::Infeasible { tail: u, head: v });
        }
        best = best.max((pv - pu) as u64);
    }
    Ok(DirectedStretch::Feasible(best))
}

// ---------------------------------------------------------------------------
// roles

/// Named role of a vertex in one of the caterpillar constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexRole {
    /// `p_i`; `p_0` is the left barrier.
    Floor(u32),
    /// One-vertex hair of `p_i`.
    FloorHair(u32),
    /// Turning-point vertex `v_a..v_g`, stored as `'a'..='g'`.
    Turn(char),
    /// Hair vertex of a turning-point vertex; `depth` counts from the attachment.
    TurnHair { at: char, depth: u8 },
    /// Weighted path gadget vertex `y_j`.
    Gadget(u32),
    /// Hair of `y_j`.
    GadgetHair(u32),
    /// Vertex `z_j` subdividing the gadget edge `y_j y_{j+1}` (directed variant).
    Subdivision(u32),
    /// Right turning fan of the directed variant.
    Fan,
    /// `i`th vertex of the filler path.
    Filler(u32),
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexRole::Floor(i) => write!(f, "p{i}"),
            VertexRole::FloorHair(i) => write!(f, "p{i}-hair"),
            VertexRole::Turn(c) => write!(f, "v_{c}"),
            VertexRole::TurnHair { at, depth } => write!(f, "v_{at}-hair{depth}"),
            VertexRole::Gadget(j) => write!(f, "y{j}"),
            VertexRole::GadgetHair(j) => write!(f, "y{j}-hair"),
            VertexRole::Subdivision(j) => write!(f, "z{j}"),
            VertexRole::Fan => write!(f, "fan"),
            VertexRole::Filler(i) => write!(f, "filler{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown role label `{0}`")]
pub struct RoleParseError(pub String);

impl FromStr for VertexRole {
    type Err = RoleParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RoleParseError(s.to_string());
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        if s == "fan" {
            return Ok(VertexRole::Fan);
        }
        if let Some(rest) = s.strip_prefix("v_") {
            let mut chars = rest.chars();
            let at = chars.next().filter(|c| ('a'..='g').contains(c)).ok_or_else(bad)?;
            let tail: &str = chars.as_str();
            return match tail {
                "" => Ok(VertexRole::Turn(at)),
                _ => {
                    let d = tail.strip_prefix("-hair").ok_or_else(bad)?;
                    let depth = d.parse::<u8>().map_err(|_| bad())?;
                    Ok(VertexRole::TurnHair { at, depth })
                }
            };
        }
        if let Some(rest) = s.strip_prefix("filler") {
            return Ok(VertexRole::Filler(num(rest)?));
        }
        let (head, hair) = match s.strip_suffix("-hair") {
            Some(h) => (h, true),
            None => (s, false),
        };
        let (kind, idx) = head.split_at(1.min(head.len()));
        let idx = num(idx)?;
        match (kind, hair) {
            ("p", false) => Ok(VertexRole::Floor(idx)),
            ("p", true) => Ok(VertexRole::FloorHair(idx)),
            ("y", false) => Ok(VertexRole::Gadget(idx)),
            ("y", true) => Ok(VertexRole::GadgetHair(idx)),
            ("z", false) => Ok(VertexRole::Subdivision(idx)),
            _ => Err(bad()),
        }
    }
}

impl VertexRole {
    /// Roles that name exactly one vertex of a construction.
    pub fn is_unique(&self) -> bool {
        matches!(
            self,
            VertexRole::Floor(_) | VertexRole::Turn(_) | VertexRole::Gadget(_) | VertexRole::Subdivision(_) | VertexRole::Filler(_)
        )
    }
}

/// Optional role per vertex, kept apart from the graph itself.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoleTable {
    roles: Vec<Option<VertexRole>>,
}

impl RoleTable {
    pub fn new(n: usize) -> Self {
        RoleTable { roles: vec![None; n] }
    }

    pub fn set(&mut self, v: u32, role: VertexRole) {
        self.roles[v as usize] = Some(role);
    }

    pub fn get(&self, v: u32) -> Option<VertexRole> {
        self.roles.get(v as usize).copied().flatten()
    }

    pub fn len(&self) -> usize {
        self.roles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roles.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, VertexRole)> + '_ {
        self.roles.iter().enumerate().filter_map(|(v, r)| r.map(|r| (v as u32, r)))
    }

    /// First vertex whose role names a specific vertex but is shared.
    pub fn duplicate_unique_label(&self) -> Option<VertexRole> {
        let mut seen = HashSet::new();
        self.iter().map(|(_, r)| r).find(|r| r.is_unique() && !seen.insert(*r))
    }
}

// ---------------------------------------------------------------------------
// caterpillars

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaterpillarError {
    #[error("graph is empty")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph contains a cycle")]
    Cyclic,
    #[error("vertices of degree at least three do not lie on one path")]
    NotCaterpillar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hair {
    /// Spine vertex the hair hangs from.
    pub attach: u32,
    /// Number of vertices on the hair.
    pub len: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarInfo {
    pub spine: Vec<u32>,
    pub hairs: Vec<Hair>,
}

impl CaterpillarInfo {
    pub fn max_hair_len(&self) -> u32 {
        self.hairs.iter().map(|h| h.len).max().unwrap_or(0)
    }
}

/// Recognizes a caterpillar and splits it into a spine and hairs. The spine
/// is the path spanned by the degree-three vertices, extended at an end by a
/// longest hanging path when that lowers the longest remaining hair.
pub fn validate_caterpillar(g: &Graph) -> Result<CaterpillarInfo, CaterpillarError> {
    let n = g.n;
    if n == 0 {
        return Err(CaterpillarError::Empty);
    }
    let adj = g.adjacency();
    // connected with n-1 edges <=> tree
    let mut seen = vec![false; n];
    let mut stack = vec![0u32];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in adj.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    if count != n {
        return Err(CaterpillarError::Disconnected);
    }
    if g.edges.len() != n - 1 {
        return Err(CaterpillarError::Cyclic);
    }

    let branch: Vec<bool> = (0..n as u32).map(|v| adj.degree(v) >= 3).collect();
    if !branch.iter().any(|&b| b) {
        // a path: take it as the spine
        let start = (0..n as u32).find(|&v| adj.degree(v) <= 1).expect("trees have leaves");
        return Ok(CaterpillarInfo { spine: walk_path(&adj, start, None, &vec![false; n]), hairs: Vec::new() });
    }

    // strip non-branch leaves until only the tree spanned by branch vertices remains
    let mut deg: Vec<usize> = (0..n as u32).map(|v| adj.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: Vec<u32> = (0..n as u32).filter(|&v| deg[v as usize] <= 1 && !branch[v as usize]).collect();
    while let Some(v) = leaves.pop() {
        removed[v as usize] = true;
        for &w in adj.neighbors(v) {
            if !removed[w as usize] {
                deg[w as usize] -= 1;
                if deg[w as usize] == 1 && !branch[w as usize] {
                    leaves.push(w);
                }
            }
        }
    }
    let core: Vec<u32> = (0..n as u32).filter(|&v| !removed[v as usize]).collect();
    if core.iter().any(|&v| deg[v as usize] > 2) {
        return Err(CaterpillarError::NotCaterpillar);
    }
    let start = *core.iter().find(|&&v| deg[v as usize] <= 1).expect("a finite path has an end");
    let mut spine = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let next = adj.neighbors(cur).iter().copied().find(|&w| !removed[w as usize] && Some(w) != prev);
        match next {
            Some(w) => {
                prev = Some(cur);
                cur = w;
                spine.push(w);
            }
            None => break,
        }
    }

    // every other vertex lies on a hair hanging from a spine vertex
    let on_spine = {
        let mut s = vec![false; n];
        for &v in &spine {
            s[v as usize] = true;
        }
        s
    };
    let mut hairs: Vec<(u32, Vec<u32>)> = Vec::new();
    for &s in &spine {
        for &h in adj.neighbors(s) {
            if !on_spine[h as usize] {
                hairs.push((s, walk_path(&adj, h, Some(s), &on_spine)));
            }
        }
    }

    // optional extension at each end
    let ends = [spine[0], *spine.last().expect("nonempty")];
    let longest_at = |end: u32, skip: Option<usize>| {
        hairs
            .iter()
            .enumerate()
            .filter(|(i, (a, _))| *a == end && Some(*i) != skip)
            .max_by_key(|(i, (_, p))| (p.len(), std::cmp::Reverse(*i)))
            .map(|(i, _)| i)
    };
    let first = longest_at(ends[0], None);
    let second = longest_at(ends[1], first);
    let max_excluding = |ex: &[usize]| {
        hairs.iter().enumerate().filter(|(i, _)| !ex.contains(i)).map(|(_, (_, p))| p.len()).max().unwrap_or(0)
    };
    let mut options: Vec<Vec<usize>> = vec![Vec::new()];
    if let Some(a) = first {
        options.push(vec![a]);
    }
    if let Some(b) = second {
        options.push(vec![b]);
        if let Some(a) = first {
            options.push(vec![a, b]);
        }
    }
    let best = options
        .into_iter()
        .min_by_key(|ex| (max_excluding(ex), ex.len()))
        .expect("at least the empty option");
    for &i in &best {
        let path = &hairs[i].1;
        if hairs[i].0 == spine[0] {
            let mut ext: Vec<u32> = path.iter().rev().copied().collect();
            ext.extend(&spine);
            spine = ext;
        } else {
            spine.extend(path);
        }
    }
    let hairs = hairs
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !best.contains(i))
        .map(|(_, (attach, p))| Hair { attach, len: p.len() as u32 })
        .collect();
    Ok(CaterpillarInfo { spine, hairs })
}

/// Follows a path of degree-at-most-two vertices starting at `start`, never
/// stepping back to `from` or onto `blocked` vertices.
fn walk_path(adj: &Adjacency, start: u32, from: Option<u32>, blocked: &[bool]) -> Vec<u32> {
    let mut out = vec![start];
    let mut prev = from;
    let mut cur = start;
    loop {
        let next = adj.neighbors(cur).iter().copied().find(|&w| Some(w) != prev && !blocked[w as usize]);
        match next {
            Some(w) => {
                out.push(w);
                prev = Some(cur);
                cur = w;
            }
            None => return out,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_graph_validation() {
        assert!(matches!(Graph::new(2, vec![(0, 0)]), Err(GraphError::SelfLoop { vertex: 0 })));
        assert!(matches!(Graph::new(2, vec![(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge { .. })));
        assert!(matches!(Graph::new(2, vec![(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })));
        assert!(Digraph::new(2, vec![(0, 1), (1, 0)]).is_ok());
        assert!(matches!(Digraph::new(2, vec![(0, 1), (1, 0)]).unwrap().topological_order(), Err(GraphError::Cyclic)));
    }

    #[test]
    fn layouts() {
        assert!(matches!(Layout::from_positions(vec![1, 1]), Err(LayoutError::Repeated { pos: 1 })));
        assert!(matches!(Layout::from_positions(vec![1, 3]), Err(LayoutError::OutOfRange { pos: 3, n: 2 })));
        let l = Layout::from_order(&[2, 0, 1]).unwrap();
        assert_eq!(l.positions(), &[2, 3, 1]);
        assert_eq!(l.order(), vec![2, 0, 1]);
        assert_eq!(l.mirrored().positions(), &[2, 1, 3]);
    }

    #[test]
    fn bandwidth_examples() {
        assert_eq!(bandwidth_of_layout(&Graph::path(3), &Layout::identity(3)).unwrap(), 1);
        assert_eq!(bandwidth_of_layout(&Graph::star(3), &Layout::identity(4)).unwrap(), 3);
        assert_eq!(bandwidth_of_layout(&Graph::new(3, vec![]).unwrap(), &Layout::identity(3)).unwrap(), 0);
        let l = Layout::from_positions(vec![3, 1, 4, 2]).unwrap();
        let g = Graph::cycle(4);
        assert_eq!(bandwidth_of_layout(&g, &l).unwrap(), bandwidth_of_layout(&g, &l.mirrored()).unwrap());
        assert!(matches!(bandwidth_of_layout(&g, &Layout::identity(3)), Err(LayoutError::Length { .. })));
    }

    #[test]
    fn directed_examples() {
        let chain = Digraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(directed_bandwidth_of_order(&chain, &Layout::identity(3)).unwrap(), DirectedStretch::Feasible(1));
        let arc = Digraph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(
            directed_bandwidth_of_order(&arc, &Layout::from_order(&[1, 0]).unwrap()).unwrap(),
            DirectedStretch::Infeasible { tail: 0, head: 1 }
        );
        let fan = Digraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(directed_bandwidth_of_order(&fan, &Layout::identity(4)).unwrap(), DirectedStretch::Feasible(3));
    }

    #[test]
    fn role_labels_round_trip() {
        let roles = [
            VertexRole::Floor(0),
            VertexRole::FloorHair(12),
            VertexRole::Turn('d'),
            VertexRole::TurnHair { at: 'd', depth: 3 },
            VertexRole::Gadget(7),
            VertexRole::GadgetHair(7),
            VertexRole::Subdivision(2),
            VertexRole::Fan,
            VertexRole::Filler(99),
        ];
        for r in roles {
            assert_eq!(r.to_string().parse::<VertexRole>().unwrap(), r);
        }
        assert!("q1".parse::<VertexRole>().is_err());
        assert!("v_h".parse::<VertexRole>().is_err());
        let mut t = RoleTable::new(3);
        t.set(0, VertexRole::Fan);
        t.set(1, VertexRole::Fan);
        assert_eq!(t.duplicate_unique_label(), None);
        t.set(2, VertexRole::Floor(1));
        t.set(1, VertexRole::Floor(1));
        assert_eq!(t.duplicate_unique_label(), Some(VertexRole::Floor(1)));
    }

    #[test]
    fn caterpillar_recognition() {
        let star = validate_caterpillar(&Graph::star(3)).unwrap();
        assert_eq!(star.spine, vec![0]);
        assert_eq!(star.hairs.len(), 3);
        assert_eq!(star.max_hair_len(), 1);

        let p = validate_caterpillar(&Graph::path(5)).unwrap();
        assert_eq!(p.spine.len(), 5);
        assert_eq!(p.max_hair_len(), 0);

        // spider with three legs of length 2: extending cannot help, so it does not
        let spider = Graph::new(7, vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let s = validate_caterpillar(&spider).unwrap();
        assert_eq!(s.spine, vec![0]);
        assert_eq!(s.max_hair_len(), 2);

        // two branch vertices each with a long tail
        let g = Graph::new(8, vec![(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let s = validate_caterpillar(&g).unwrap();
        assert_eq!(s.max_hair_len(), 1);

        // subdivided K_{1,3} with a branch at each leg end: not a caterpillar
        let t = Graph::new(
            10,
            vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
        )
        .unwrap();
        assert_eq!(validate_caterpillar(&t), Err(CaterpillarError::NotCaterpillar));
        assert_eq!(validate_caterpillar(&Graph::cycle(3)), Err(CaterpillarError::Cyclic));
        assert_eq!(validate_caterpillar(&Graph::new(2, vec![]).unwrap()), Err(CaterpillarError::Disconnected));
    }
}
