//! Block rotations on linear extensions.
//!
//! All maps act on rank vectors (`ranks[u] = L(u)`).  Each one moves a single
//! element across a block of elements it is incomparable with and shifts the
//! block by one, so the result is again a linear extension; the drivers
//! re-check this after every step.

use crate::error::{Error, Result};
use crate::poset::{bits, LinearExtension, Poset};

fn undefined(msg: impl Into<String>) -> Error {
    Error::StepUndefined(msg.into())
}

fn order_of(ranks: &[u32]) -> Vec<usize> {
    let mut order = vec![0; ranks.len()];
    for (u, &r) in ranks.iter().enumerate() {
        order[r as usize - 1] = u;
    }
    order
}

/// Moves the element at rank `from` to rank `to`, shifting the elements in
/// between by one towards `from`.
fn rotate(ranks: &mut [u32], from: u32, to: u32) {
    let order = order_of(ranks);
    let moving = order[from as usize - 1];
    if from < to {
        for r in from + 1..=to {
            ranks[order[r as usize - 1]] -= 1;
        }
    } else {
        for r in to..from {
            ranks[order[r as usize - 1]] += 1;
        }
    }
    ranks[moving] = to;
}

fn finish(p: &Poset, ranks: Vec<u32>, what: &str) -> Result<LinearExtension> {
    LinearExtension::new(p, ranks)
        .map_err(|_| undefined(format!("{what} left the set of linear extensions")))
}

/// A linear extension with `L(x) = pos`: a linear extension of the elements
/// not above `x` that lists the down-set of `x` first, cut after `pos - 1`
/// elements, then `x`, then the rest.  Exists iff `f(x) < pos <= n - g(x)`.
pub fn anchored_extension(p: &Poset, x: usize, pos: u32) -> Result<LinearExtension> {
    let n = p.len();
    if pos == 0 || p.down_count(x) >= pos as usize || pos as usize > n - p.up_count(x) {
        return Err(undefined(format!(
            "no linear extension puts element {x} at rank {pos}"
        )));
    }
    let down = p.below_mask(x);
    let not_above = p.full_mask() & !p.above_mask(x) & !(1u64 << x);
    let mut order = topological(p, down, 0);
    let side = topological(p, not_above & !down, down);
    order.extend_from_slice(&side[..pos as usize - 1 - order.len()]);
    order.push(x);
    let placed = order.iter().fold(0u64, |m, &u| m | 1 << u);
    order.extend(topological(p, p.full_mask() & !placed, placed));
    LinearExtension::from_order(p, &order)
}

/// Smallest-id-first topological order of `set`, assuming `done` is placed.
fn topological(p: &Poset, set: u64, mut done: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut left = set;
    while left != 0 {
        let u = bits(left)
            .find(|&u| p.below_mask(u) & !done == 0)
            .expect("set is closed under the order");
        out.push(u);
        done |= 1 << u;
        left &= !(1 << u);
    }
    out
}

/// Raises the gap `L(y) - L(x)` by one, keeping `L(x)`: the first element
/// `w` after `y` that is incomparable to `y` moves to `y`'s rank, and `y`
/// with everything between shifts up by one.
pub fn phi_step(p: &Poset, x: usize, y: usize, l: &LinearExtension) -> Result<LinearExtension> {
    let ranks = l.ranks();
    let (a, n) = (ranks[y], p.len() as u32);
    if ranks[x] >= a {
        return Err(undefined("the gap map needs L(x) < L(y)"));
    }
    let order = order_of(ranks);
    let b = (a + 1..=n)
        .find(|&r| p.incomparable(order[r as usize - 1], y))
        .ok_or_else(|| undefined(format!("no element after {y} is incomparable to it")))?;
    let mut out = ranks.to_vec();
    rotate(&mut out, b, a);
    finish(p, out, "Φ")
}

/// Lowers the gap `L(y) - L(x)` by one.  If some element strictly between
/// `x` and `y` is incomparable to `x`, the first such `w` moves to `x`'s rank
/// and `x` with the block before `w` shifts up; otherwise the last element
/// `w` between them that is incomparable to `y` moves to `y`'s rank and the
/// block after `w` (with `y`) shifts down.
pub fn psi_step(p: &Poset, x: usize, y: usize, l: &LinearExtension) -> Result<LinearExtension> {
    let ranks = l.ranks();
    let (a, b) = (ranks[x], ranks[y]);
    if b <= a + 1 {
        return Err(undefined("the gap is already at most one"));
    }
    let order = order_of(ranks);
    let mut out = ranks.to_vec();
    if let Some(r) = (a + 1..b).find(|&r| p.incomparable(order[r as usize - 1], x)) {
        rotate(&mut out, r, a);
    } else if let Some(r) = (a + 1..b)
        .rev()
        .find(|&r| p.incomparable(order[r as usize - 1], y))
    {
        rotate(&mut out, r, b);
    } else {
        return Err(undefined(format!(
            "every element between {x} and {y} is comparable to both"
        )));
    }
    finish(p, out, "Ψ")
}

/// Replay of the constructive positivity argument: start at `L(x) = c` with
/// `c = min(n - g(x), n - k - g(y))`, then apply Φ or Ψ until the gap is `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapTrace {
    pub start: LinearExtension,
    pub end: LinearExtension,
    /// Gap after each step.
    pub gaps: Vec<i64>,
}

impl GapTrace {
    pub fn steps(&self) -> usize {
        self.gaps.len()
    }
}

pub fn gap_driver(p: &Poset, x: usize, y: usize, k: i64) -> Result<GapTrace> {
    if !p.lt(x, y) {
        return Err(Error::NotBelow { x, y });
    }
    let n = p.len() as i64;
    let c = (n - p.up_count(x) as i64).min(n - k - p.up_count(y) as i64);
    if c < 1 {
        return Err(undefined(format!("no anchor rank for gap {k}")));
    }
    let start = anchored_extension(p, x, c as u32)?;
    let gap = |l: &LinearExtension| l.rank(y) as i64 - l.rank(x) as i64;
    let mut cur = start.clone();
    let mut gaps = Vec::new();
    while gap(&cur) != k {
        let before = gap(&cur);
        let next = if before < k {
            phi_step(p, x, y, &cur)?
        } else {
            psi_step(p, x, y, &cur)?
        };
        let after = gap(&next);
        let want = if before < k { before + 1 } else { before - 1 };
        if after != want {
            return Err(undefined(format!("gap moved from {before} to {after}")));
        }
        gaps.push(after);
        cur = next;
        if gaps.len() > p.len() {
            return Err(undefined("the gap driver did not terminate within n steps"));
        }
    }
    Ok(GapTrace {
        start,
        end: cur,
        gaps,
    })
}

/// The element at `L(x) + 1`, required to be incomparable to `x`.
fn right_neighbour(p: &Poset, order: &[usize], ranks: &[u32], x: usize) -> Result<usize> {
    let r = ranks[x] as usize;
    match order.get(r) {
        Some(&v) if p.incomparable(v, x) => Ok(v),
        _ => Err(undefined(format!(
            "the right neighbour of {x} is missing or comparable to it"
        ))),
    }
}

/// Raises `L(y)` by one keeping the gap `L(y) - L(x)`: the first element `p`
/// after `y` incomparable to `y` moves to `y`'s rank (the block from `y`
/// shifts up) and `x` swaps with its incomparable right neighbour.
pub fn omega_step(p: &Poset, x: usize, y: usize, l: &LinearExtension) -> Result<LinearExtension> {
    let ranks = l.ranks();
    if ranks[x] >= ranks[y] {
        return Err(undefined("Ω needs L(x) < L(y)"));
    }
    let n = p.len() as u32;
    if ranks[y] >= n - p.up_count(y) as u32 {
        return Err(undefined(format!("L({y}) is already maximal")));
    }
    let order = order_of(ranks);
    let v = right_neighbour(p, &order, ranks, x)?;
    if v == y {
        return Err(undefined("Ω needs a gap of at least two"));
    }
    let a = ranks[y];
    let b = (a + 1..=n)
        .find(|&r| p.incomparable(order[r as usize - 1], y))
        .ok_or_else(|| undefined(format!("no element after {y} is incomparable to it")))?;
    let mut out = ranks.to_vec();
    rotate(&mut out, b, a);
    out.swap(x, v);
    finish(p, out, "Ω")
}

/// Lowers `L(w)` by one keeping `L(x)` and `L(y)`: the last element `p`
/// before `w` incomparable to `w` moves to `w`'s rank (the block after `p`
/// shifts down); if `p` was before `x`, `x` is swapped back with the element
/// that was its incomparable right neighbour.
pub fn theta_step(
    p: &Poset,
    x: usize,
    y: usize,
    w: usize,
    l: &LinearExtension,
) -> Result<LinearExtension> {
    let ranks = l.ranks();
    if !p.lt(x, w) || p.lt(y, w) || w == y {
        return Err(undefined(format!(
            "Θ needs {x} < {w} with {w} not above-or-equal {y}"
        )));
    }
    if ranks[w] as usize <= p.down_count(w) + 1 {
        return Err(undefined(format!("L({w}) is already minimal")));
    }
    if !(ranks[x] < ranks[w] && ranks[w] < ranks[y]) {
        return Err(undefined(format!(
            "Θ needs {w} strictly between {x} and {y}"
        )));
    }
    let order = order_of(ranks);
    let v = right_neighbour(p, &order, ranks, x)?;
    let b = ranks[w];
    let a = (1..b)
        .rev()
        .find(|&r| p.incomparable(order[r as usize - 1], w))
        .ok_or_else(|| undefined(format!("nothing before {w} is incomparable to it")))?;
    let mut out = ranks.to_vec();
    rotate(&mut out, a, b);
    if a < ranks[x] {
        out.swap(x, v);
    }
    finish(p, out, "Θ")
}

/// Replay of the normalising construction for a flat gap fiber with
/// witness `x`: Ω until `L(y) = n - g(y)`, then Θ until `L(w) = f(w) + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimTrace {
    pub end: LinearExtension,
    pub omega_steps: usize,
    pub theta_steps: usize,
}

pub fn claim_driver(
    p: &Poset,
    x: usize,
    y: usize,
    w: usize,
    start: &LinearExtension,
) -> Result<ClaimTrace> {
    let n = p.len() as u32;
    let k = start.rank(y) as i64 - start.rank(x) as i64;
    let gap = |l: &LinearExtension| l.rank(y) as i64 - l.rank(x) as i64;
    let y_max = n - p.up_count(y) as u32;
    let w_min = p.down_count(w) as u32 + 1;
    let mut cur = start.clone();
    let mut omega_steps = 0;
    while cur.rank(y) < y_max {
        let next = omega_step(p, x, y, &cur)?;
        if gap(&next) != k || next.rank(y) != cur.rank(y) + 1 {
            return Err(undefined("Ω changed the gap or did not raise L(y) by one"));
        }
        cur = next;
        omega_steps += 1;
    }
    let mut theta_steps = 0;
    while cur.rank(w) > w_min {
        let next = theta_step(p, x, y, w, &cur)?;
        if next.rank(x) != cur.rank(x)
            || next.rank(y) != cur.rank(y)
            || next.rank(w) + 1 != cur.rank(w)
        {
            return Err(undefined("Θ moved x or y, or did not lower L(w) by one"));
        }
        cur = next;
        theta_steps += 1;
    }
    Ok(ClaimTrace {
        end: cur,
        omega_steps,
        theta_steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equality::ks_vanishing;
    use crate::poset::unlabeled_posets;

    fn c3_plus_c3() -> Poset {
        Poset::from_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn anchored_extensions_exist_exactly_in_the_window() {
        for n in 1..=5 {
            for p in unlabeled_posets(n) {
                for x in 0..n {
                    for pos in 1..=n as u32 {
                        let ok = crate::equality::stanley_vanishing(&p, x, pos as i64);
                        match anchored_extension(&p, x, pos) {
                            Ok(l) => {
                                assert!(ok);
                                assert_eq!(l.rank(x), pos);
                            }
                            Err(_) => assert!(!ok),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn psi_on_the_stacked_extension() {
        // C3 + C3 with ids 0..2 = a1..a3 and 3..5 = b1..b3, L = b1 b2 b3 a1 a2 a3,
        // x = b1, y = a3: a1 is the first element between them incomparable
        // to x, so it moves to rank 1 and the gap drops from 5 to 4.
        let p = c3_plus_c3();
        let l = LinearExtension::from_order(&p, &[3, 4, 5, 0, 1, 2]).unwrap();
        let out = psi_step(&p, 3, 2, &l).unwrap();
        assert_eq!(out.rank(2) as i64 - out.rank(3) as i64, 4);
        assert_eq!(out.rank(2), 6);
        assert_eq!(out.order(), vec![0, 3, 4, 5, 1, 2]);
    }

    #[test]
    fn phi_and_psi_move_the_gap_by_one() {
        for n in 2..=5 {
            for p in unlabeled_posets(n) {
                p.for_each_extension(|order, _| {
                    let l = LinearExtension::from_order(&p, order).unwrap();
                    for x in 0..n {
                        for y in 0..n {
                            if x == y || l.rank(x) >= l.rank(y) {
                                continue;
                            }
                            let gap = l.rank(y) as i64 - l.rank(x) as i64;
                            if let Ok(m) = phi_step(&p, x, y, &l) {
                                assert_eq!(m.rank(x), l.rank(x));
                                assert_eq!(m.rank(y) as i64 - m.rank(x) as i64, gap + 1);
                            }
                            if let Ok(m) = psi_step(&p, x, y, &l) {
                                assert_eq!(m.rank(y) as i64 - m.rank(x) as i64, gap - 1);
                            }
                        }
                    }
                });
            }
        }
    }

    #[test]
    fn gap_driver_reaches_every_nonempty_fiber() {
        for n in 2..=6 {
            for p in unlabeled_posets(n) {
                for (x, y) in p.relations() {
                    for k in 1..n as i64 {
                        if ks_vanishing(&p, x, y, k).unwrap() {
                            let t = gap_driver(&p, x, y, k).unwrap();
                            assert_eq!(t.end.rank(y) as i64 - t.end.rank(x) as i64, k);
                            assert!(t.steps() <= n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn terminal_fiber_takes_no_step() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        let t = gap_driver(&p, 0, 2, 2).unwrap();
        assert_eq!(t.steps(), 0);
    }

    #[test]
    fn omega_refuses_at_maximal_rank() {
        let p = Poset::from_relations(4, &[(0, 3)]).unwrap();
        let l = LinearExtension::from_order(&p, &[1, 0, 2, 3]).unwrap();
        assert!(matches!(
            omega_step(&p, 0, 3, &l),
            Err(Error::StepUndefined(_))
        ));
    }
}
