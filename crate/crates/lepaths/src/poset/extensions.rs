use super::{LinearExtension, Poset};

/// Backtracking stream of linear extensions.
///
/// At each depth the minimal elements of the remaining subposet are tried in
/// ascending id order, so the stream is lexicographic in the element sequence.
pub struct Extensions<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    ranks: Vec<u32>,
    placed: u64,
    /// `pending[d]`: candidates at depth `d` not tried yet.
    pending: Vec<u64>,
    started: bool,
    done: bool,
}

impl<'a> Extensions<'a> {
    pub(super) fn new(poset: &'a Poset) -> Self {
        Extensions {
            poset,
            order: Vec::with_capacity(poset.len()),
            ranks: vec![0; poset.len()],
            placed: 0,
            pending: Vec::with_capacity(poset.len()),
            started: false,
            done: false,
        }
    }

    fn available(&self) -> u64 {
        let mut mask = 0u64;
        for u in super::bits(self.poset.full_mask() & !self.placed) {
            if self.poset.below[u] & !self.placed == 0 {
                mask |= 1 << u;
            }
        }
        mask
    }

    fn pop(&mut self) {
        let u = self.order.pop().expect("nonempty prefix");
        self.placed &= !(1 << u);
        self.ranks[u] = 0;
    }

    /// Moves to the next complete extension; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let n = self.poset.len();
        if !self.started {
            self.started = true;
            if n == 0 {
                return true;
            }
            let first = self.available();
            self.pending.push(first);
        } else {
            if n == 0 {
                self.done = true;
                return false;
            }
            self.pop();
        }
        loop {
            let d = self.order.len();
            let rem = self.pending[d];
            if rem == 0 {
                self.pending.pop();
                if d == 0 {
                    self.done = true;
                    return false;
                }
                self.pop();
                continue;
            }
            let u = rem.trailing_zeros() as usize;
            self.pending[d] &= rem - 1;
            self.order.push(u);
            self.ranks[u] = self.order.len() as u32;
            self.placed |= 1 << u;
            if self.order.len() == n {
                return true;
            }
            let next = self.available();
            self.pending.push(next);
        }
    }

    /// Elements of the current extension by increasing rank.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Ranks of the current extension, indexed by element.
    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }
}

impl Iterator for Extensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        self.advance()
            .then(|| LinearExtension::from_ranks_unchecked(self.ranks.clone()))
    }
}
