//! Exhaustive generation of posets up to isomorphism.
//!
//! Every `n`-element poset arises from an `(n-1)`-element one by adjoining a
//! new maximal element above some order ideal.  Candidates are deduplicated
//! by a canonical code: elements are first split into classes by iterated
//! colour refinement (ideal sizes, then colours of the elements above and
//! below), and the lexicographically smallest relation matrix over orderings
//! compatible with the classes is found by branch and bound.

use std::collections::BTreeMap;

use super::{bits, Poset};

/// Largest size for which [`canonical_code`] fits its code in 128 bits.
pub const MAX_CANONICAL: usize = 11;

/// Canonical code of `p` and an ordering realizing it (`order[i]` is the
/// element placed at canonical position `i`).  Isomorphic posets, and only
/// those, share a code.
///
/// # Panics
/// If `p` has more than [`MAX_CANONICAL`] elements.
pub fn canonical_code(p: &Poset) -> (u128, Vec<usize>) {
    let n = p.len();
    assert!(
        n <= MAX_CANONICAL,
        "canonical codes support at most {MAX_CANONICAL} elements"
    );
    let colors = refined_colors(p);
    // Positions are filled class by class in increasing colour order.
    let mut slots: Vec<usize> = colors.clone();
    slots.sort_unstable();
    let mut search = Search {
        p,
        colors: &colors,
        slots: &slots,
        cur_rows: Vec::with_capacity(n),
        cur_order: Vec::with_capacity(n),
        best_rows: None,
        best_order: Vec::new(),
    };
    search.run(0);
    let rows = search.best_rows.unwrap_or_default();
    let mut code: u128 = 0;
    for (i, r) in rows.iter().enumerate() {
        code = (code << (2 * i)) | *r as u128;
    }
    (code, search.best_order)
}

struct Search<'a> {
    p: &'a Poset,
    colors: &'a [usize],
    slots: &'a [usize],
    cur_rows: Vec<u32>,
    cur_order: Vec<usize>,
    best_rows: Option<Vec<u32>>,
    best_order: Vec<usize>,
}

impl Search<'_> {
    fn row(&self, c: usize) -> u32 {
        let mut r = 0u32;
        for &prev in &self.cur_order {
            r = (r << 2) | (self.p.lt(prev, c) as u32) << 1 | self.p.lt(c, prev) as u32;
        }
        r
    }

    fn run(&mut self, pos: usize) {
        let n = self.p.len();
        if pos == n {
            if self.best_rows.as_ref().is_none_or(|b| self.cur_rows < *b) {
                self.best_rows = Some(self.cur_rows.clone());
                self.best_order = self.cur_order.clone();
            }
            return;
        }
        for c in 0..n {
            if self.colors[c] != self.slots[pos] || self.cur_order.contains(&c) {
                continue;
            }
            let r = self.row(c);
            self.cur_rows.push(r);
            let worse = self
                .best_rows
                .as_ref()
                .is_some_and(|b| self.cur_rows[..] > b[..=pos]);
            if !worse {
                self.cur_order.push(c);
                self.run(pos + 1);
                self.cur_order.pop();
            }
            self.cur_rows.pop();
        }
    }
}

/// Isomorphism-invariant colour classes, numbered `0..` in a canonical order.
fn refined_colors(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let mut colors = renumber(
        &(0..n)
            .map(|u| vec![p.down_count(u), p.up_count(u)])
            .collect::<Vec<_>>(),
    );
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let mut below: Vec<usize> = bits(p.below_mask(u)).map(|v| colors[v]).collect();
                let mut above: Vec<usize> = bits(p.above_mask(u)).map(|v| colors[v]).collect();
                below.sort_unstable();
                above.sort_unstable();
                let mut sig = vec![colors[u], below.len()];
                sig.extend(below);
                sig.push(usize::MAX);
                sig.extend(above);
                sig
            })
            .collect();
        let next = renumber(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn renumber(sigs: &[Vec<usize>]) -> Vec<usize> {
    let index: BTreeMap<&Vec<usize>, usize> = {
        let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        distinct
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect()
    };
    sigs.iter().map(|s| index[s]).collect()
}

/// All posets on `n` elements up to isomorphism, each relabelled into its
/// canonical order, sorted by canonical code.
pub fn unlabeled_posets(n: usize) -> Vec<Poset> {
    let mut level: Vec<Poset> = vec![Poset::antichain(0)];
    for m in 1..=n {
        let mut found: BTreeMap<u128, Poset> = BTreeMap::new();
        for base in &level {
            for ideal in order_ideals(base) {
                let mut above: Vec<u64> = (0..m - 1).map(|u| base.above_mask(u)).collect();
                for u in bits(ideal) {
                    above[u] |= 1 << (m - 1);
                }
                above.push(0);
                let cand = Poset::from_above(above);
                let (code, order) = canonical_code(&cand);
                found.entry(code).or_insert_with(|| {
                    let mut perm = vec![0; m];
                    for (i, &u) in order.iter().enumerate() {
                        perm[u] = i;
                    }
                    cand.relabel(&perm)
                        .expect("relabelling preserves the order")
                });
            }
        }
        level = found.into_values().collect();
    }
    level
}

fn order_ideals(p: &Poset) -> Vec<u64> {
    let n = p.len();
    (0u64..1 << n)
        .filter(|&s| bits(s).all(|u| p.below_mask(u) & !s == 0))
        .collect()
}
