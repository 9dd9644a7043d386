//! Enumerated extensions of a small poset, gap fibers and the
//! neighbour witness for flat gap counts.

use crate::error::Result;
use crate::poset::Poset;

use super::distinct;

/// Every linear extension of a poset, stored as ranks and orders.
pub struct ExtensionTable {
    n: usize,
    /// `ranks[i * n + u]` is the rank of `u` in extension `i`.
    ranks: Vec<u8>,
    /// `orders[i * n + t]` is the element of rank `t + 1` in extension `i`.
    orders: Vec<u8>,
}

impl ExtensionTable {
    pub fn new(p: &Poset) -> ExtensionTable {
        let n = p.len();
        let mut ranks = Vec::new();
        let mut orders = Vec::new();
        p.for_each_extension(|order, r| {
            ranks.extend(r.iter().map(|&v| v as u8));
            orders.extend(order.iter().map(|&v| v as u8));
        });
        ExtensionTable { n, ranks, orders }
    }

    pub fn len(&self) -> usize {
        self.ranks.len().checked_div(self.n).unwrap_or(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Rank of `u` in extension `i`.
    pub fn rank(&self, i: usize, u: usize) -> i64 {
        self.ranks[i * self.n + u] as i64
    }

    /// Ranks of extension `i`.
    pub fn ranks_of(&self, i: usize) -> Vec<u32> {
        self.ranks[i * self.n..(i + 1) * self.n]
            .iter()
            .map(|&r| r as u32)
            .collect()
    }

    /// Element order of extension `i`.
    pub fn order_of(&self, i: usize) -> Vec<usize> {
        self.orders[i * self.n..(i + 1) * self.n]
            .iter()
            .map(|&u| u as usize)
            .collect()
    }

    /// Element of rank `r` (1-based) in extension `i`, if any.
    pub fn at(&self, i: usize, r: i64) -> Option<usize> {
        (1..=self.n as i64)
            .contains(&r)
            .then(|| self.orders[i * self.n + r as usize - 1] as usize)
    }

    /// `N(k)` for `k = 0..=n + 1` (index `k`).
    pub fn n_counts(&self, x: usize) -> Vec<u64> {
        let mut out = vec![0; self.n + 2];
        for i in 0..self.len() {
            out[self.rank(i, x) as usize] += 1;
        }
        out
    }

    /// `F(k)` for `k = -n..=n` (index `k + n`).
    pub fn f_counts(&self, x: usize, y: usize) -> Vec<u64> {
        let n = self.n as i64;
        let mut out = vec![0; 2 * self.n + 1];
        for i in 0..self.len() {
            out[(self.rank(i, y) - self.rank(i, x) + n) as usize] += 1;
        }
        out
    }

    /// Indices of the extensions with `L(y) - L(x) = k`.
    pub fn fiber(&self, x: usize, y: usize, k: i64) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.rank(i, y) - self.rank(i, x) == k)
    }

    /// The neighbours of `z` in extension `i` when both exist and are
    /// incomparable to `z`.
    pub fn incomparable_neighbours(&self, p: &Poset, i: usize, z: usize) -> Option<(usize, usize)> {
        let r = self.rank(i, z);
        let u = self.at(i, r - 1)?;
        let v = self.at(i, r + 1)?;
        (p.incomparable(u, z) && p.incomparable(v, z)).then_some((u, v))
    }

    /// For each `k = -n..=n` (index `k + n`), whether every extension of the
    /// `k`-fiber has incomparable neighbours around `x`, resp. `y`.  Empty
    /// fibers report `true`.
    pub fn witness_flags(&self, p: &Poset, x: usize, y: usize) -> Vec<(bool, bool)> {
        let n = self.n as i64;
        let mut out = vec![(true, true); 2 * self.n + 1];
        for i in 0..self.len() {
            let slot = &mut out[(self.rank(i, y) - self.rank(i, x) + n) as usize];
            if slot.0 && self.incomparable_neighbours(p, i, x).is_none() {
                slot.0 = false;
            }
            if slot.1 && self.incomparable_neighbours(p, i, y).is_none() {
                slot.1 = false;
            }
        }
        out
    }
}

/// One extension of the fiber with the incomparable neighbours `u`, `v` of
/// the witness element (`L(u) + 1 = L(z) = L(v) - 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEntry {
    pub order: Vec<usize>,
    pub u: usize,
    pub v: usize,
}

/// An element `z ∈ {x, y}` whose neighbours are incomparable to it in every
/// extension with `L(y) - L(x) = k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub z: usize,
    pub entries: Vec<WitnessEntry>,
}

/// Searches `z = x`, then `z = y`.  Returns `None` when neither works or the
/// fiber is empty (the condition is only meaningful when `F(k) > 0`).
pub fn condition_b_witness(p: &Poset, x: usize, y: usize, k: i64) -> Result<Option<Witness>> {
    distinct(p, x, y)?;
    let table = ExtensionTable::new(p);
    Ok(witness_in(&table, p, x, y, k))
}

pub(crate) fn witness_in(
    table: &ExtensionTable,
    p: &Poset,
    x: usize,
    y: usize,
    k: i64,
) -> Option<Witness> {
    let fiber: Vec<usize> = table.fiber(x, y, k).collect();
    if fiber.is_empty() {
        return None;
    }
    [x, y].into_iter().find_map(|z| {
        let entries = fiber
            .iter()
            .map(|&i| {
                let (u, v) = table.incomparable_neighbours(p, i, z)?;
                Some(WitnessEntry {
                    order: table.order_of(i),
                    u,
                    v,
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Witness { z, entries })
    })
}
