//! Position bookkeeping for the layout witness builders: which positions are
//! taken, which are reserved, and fast nearest-free queries.

pub(crate) const NONE: u32 = u32::MAX;

pub(crate) struct SlotBoard {
    /// Vertex at each position `1..=n`, index 0 and `n + 1` are sentinels.
    owner: Vec<u32>,
    // union-find jump tables over positions that are neither taken nor reserved
    up: Vec<u32>,
    down: Vec<u32>,
}

impl SlotBoard {
    pub(crate) fn new(n: u32) -> Self {
        let len = n as usize + 2;
        SlotBoard {
            owner: vec![NONE; len],
            up: (0..len as u32).collect(),
            down: (0..len as u32).collect(),
        }
    }

    pub(crate) fn n(&self) -> u32 {
        self.owner.len() as u32 - 2
    }

    fn close(&mut self, p: u32) {
        self.up[p as usize] = p + 1;
        self.down[p as usize] = p - 1;
    }

    pub(crate) fn reserve(&mut self, p: u32) {
        self.close(p);
    }

    pub(crate) fn is_used(&self, p: u32) -> bool {
        self.owner[p as usize] != NONE
    }

    /// Puts `v` at `p`; returns the previous owner if the slot was taken.
    pub(crate) fn occupy(&mut self, p: u32, v: u32) -> Result<(), u32> {
        if p == 0 || p > self.n() {
            return Err(NONE);
        }
        if self.is_used(p) {
            return Err(self.owner[p as usize]);
        }
        self.owner[p as usize] = v;
        self.close(p);
        Ok(())
    }

    fn find(table: &mut [u32], p: u32) -> u32 {
        let mut root = p;
        while table[root as usize] != root {
            root = table[root as usize];
        }
        let mut cur = p;
        while table[cur as usize] != root {
            let next = table[cur as usize];
            table[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// Smallest free, unreserved position `>= p`.
    pub(crate) fn next_available(&mut self, p: u32) -> Option<u32> {
        let n = self.n();
        let r = Self::find(&mut self.up, p.clamp(1, n + 1));
        (r <= n).then_some(r)
    }

    /// Largest free, unreserved position `<= p`.
    pub(crate) fn prev_available(&mut self, p: u32) -> Option<u32> {
        let n = self.n();
        let r = Self::find(&mut self.down, p.min(n));
        (r >= 1).then_some(r)
    }

    /// Largest position `<= p` with no vertex, reserved or not.
    pub(crate) fn prev_unused(&self, p: u32) -> Option<u32> {
        (1..=p.min(self.n())).rev().find(|&q| !self.is_used(q))
    }

    pub(crate) fn owners(&self) -> &[u32] {
        &self.owner[1..self.owner.len() - 1]
    }
}
