//! Equality and vanishing conditions for the Stanley and Kahn–Saks
//! inequalities, the block-rotation maps that construct extensions with a
//! prescribed gap, and the scan harness for the equality characterisation on
//! general posets.
//!
//! Width-two predicates that mention `alpha_0`, `alpha_{a+1}`, `beta_0` or
//! `beta_{b+1}` resolve them to a virtual bottom `0̂` / top `1̂` comparable to
//! every element; indices further out make the predicate false.

mod fiber;
mod maps;
mod profile;
mod report;
mod scan;

use crate::error::{Error, Result};
use crate::poset::{bits, Chain, ChainPartition, Poset};

pub use fiber::{condition_b_witness, ExtensionTable, Witness, WitnessEntry};
pub use maps::{
    anchored_extension, claim_driver, gap_driver, omega_step, phi_step, psi_step, theta_step,
    ClaimTrace, GapTrace,
};
pub use profile::{level_profile, midway_interval, LevelProfile};
pub use report::{ks_equality_report, stanley_equality_report, EqualityReport};
pub use scan::{
    conjecture_scan, region_equality_suite, vanishing_suite, ConjectureScan, RegionSuite,
    ScanOptions, Specimen, VanishingSuite,
};

/// `N(k) > 0` by the ideal-size criterion: `f(x) <= k - 1` and
/// `g(x) <= n - k`.
pub fn stanley_vanishing(p: &Poset, x: usize, k: i64) -> bool {
    let n = p.len() as i64;
    (1..=n).contains(&k) && (p.down_count(x) as i64) < k && p.up_count(x) as i64 <= n - k
}

/// `F(k) > 0` for `x < y` by the window `h(x, y) < k < n - f(x) - g(y)`.
/// Refuses pairs that are not `x < y`.
pub fn ks_vanishing(p: &Poset, x: usize, y: usize, k: i64) -> Result<bool> {
    if !p.lt(x, y) {
        return Err(Error::NotBelow { x, y });
    }
    let n = p.len() as i64;
    let h = p.between_count(x, y) as i64;
    Ok(h < k && k < n - p.down_count(x) as i64 - p.up_count(y) as i64)
}

/// The ideal-size condition for `N(k) = N(k - 1) = N(k + 1)`:
/// `f(y) > k` for every `y > x` and `g(y) > n - k + 1` for every `y < x`.
///
/// The virtual bottom and top take part in the quantifiers: `0̂ < x`
/// contributes `g(0̂) = n > n - k + 1`, i.e. `k > 1`, and `1̂ > x`
/// contributes `f(1̂) = n > k`.  Without the bottom the condition would hold
/// vacuously at `k = 1` for a minimal `x` with no small successors, where
/// `N(0) = 0` rules out equality.
pub fn svh_condition(p: &Poset, x: usize, k: i64) -> bool {
    let n = p.len() as i64;
    k > 1
        && k < n
        && bits(p.above_mask(x)).all(|y| p.down_count(y) as i64 > k)
        && bits(p.below_mask(x)).all(|y| p.up_count(y) as i64 > n - k + 1)
}

/// Real or virtual element of a width-two poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Elem {
    Bottom,
    Real(usize),
    Top,
    Missing,
}

impl Elem {
    fn lt(self, other: Elem, p: &Poset) -> bool {
        use Elem::*;
        match (self, other) {
            (Missing, _) | (_, Missing) => false,
            (Real(u), Real(v)) => p.lt(u, v),
            (Bottom, Real(_) | Top) | (Real(_), Top) => true,
            _ => false,
        }
    }

    fn incomparable(self, other: Elem, p: &Poset) -> bool {
        match (self, other) {
            (Elem::Real(u), Elem::Real(v)) => p.incomparable(u, v),
            _ => false,
        }
    }
}

/// The `i`-th element (1-based) of a chain, with `0` and `len + 1` virtual.
fn chain_elem(chain: &[usize], i: i64) -> Elem {
    let len = chain.len() as i64;
    match i {
        0 => Elem::Bottom,
        i if i == len + 1 => Elem::Top,
        i if (1..=len).contains(&i) => Elem::Real(chain[i as usize - 1]),
        _ => Elem::Missing,
    }
}

/// The `k`-pentagon property of `x = alpha_r` (or `beta_r`, with the chains
/// exchanged): `alpha_{r-1} < beta_{k-r} < beta_{k-r+1} < alpha_{r+1}` and
/// `alpha_r || beta_{k-r}`, `alpha_r || beta_{k-r+1}`.
pub fn pentagon_property(p: &Poset, cp: &ChainPartition, x: usize, k: i64) -> bool {
    let (which, r) = cp.position(x);
    let own = cp.chain(which);
    let other = cp.chain(which.other());
    let r = r as i64;
    let lo = chain_elem(own, r - 1);
    let hi = chain_elem(own, r + 1);
    let b1 = chain_elem(other, k - r);
    let b2 = chain_elem(other, k - r + 1);
    let xe = Elem::Real(x);
    lo.lt(b1, p) && b1.lt(b2, p) && b2.lt(hi, p) && xe.incomparable(b1, p) && xe.incomparable(b2, p)
}

/// The `k`-midway property of `(x, y)`: `f(z) + g(y) > n - k` for every
/// `z > x` with `z` not above-or-equal `y`, `h(z, y) > k` for every `z < x`,
/// and `f(y) > k`.
///
/// `y` itself is excluded from the first quantifier.  Admitting `z = y`
/// would add the clause `f(y) + g(y) > n - k`, which breaks the equivalence
/// with the neighbour-witness condition even on comparable pairs.
pub fn midway_property(p: &Poset, x: usize, y: usize, k: i64) -> Result<bool> {
    distinct(p, x, y)?;
    let n = p.len() as i64;
    let gy = p.up_count(y) as i64;
    let first = bits(p.above_mask(x))
        .filter(|&z| z != y && !p.lt(y, z))
        .all(|z| p.down_count(z) as i64 + gy > n - k);
    let second = bits(p.below_mask(x)).all(|z| p.between_count(z, y) as i64 > k);
    Ok(first && second && p.down_count(y) as i64 > k)
}

/// The dual `k`-midway property of `(x, y)`: `g(z) + f(x) > n - k` for every
/// `z < y` with `z` not below-or-equal `x`, `h(x, z) > k` for every `z > y`,
/// and `g(x) > k`.
pub fn dual_midway_property(p: &Poset, x: usize, y: usize, k: i64) -> Result<bool> {
    distinct(p, x, y)?;
    let n = p.len() as i64;
    let fx = p.down_count(x) as i64;
    let first = bits(p.below_mask(y))
        .filter(|&z| z != x && !p.lt(z, x))
        .all(|z| p.up_count(z) as i64 + fx > n - k);
    let second = bits(p.above_mask(y)).all(|z| p.between_count(x, z) as i64 > k);
    Ok(first && second && p.up_count(x) as i64 > k)
}

/// Midway or dual midway.
pub fn either_midway(p: &Poset, x: usize, y: usize, k: i64) -> Result<bool> {
    Ok(midway_property(p, x, y, k)? || dual_midway_property(p, x, y, k)?)
}

fn distinct(p: &Poset, x: usize, y: usize) -> Result<()> {
    for id in [x, y] {
        if id >= p.len() {
            return Err(Error::ElementOutOfRange { id, n: p.len() });
        }
    }
    if x == y {
        return Err(Error::NotDistinct(x));
    }
    Ok(())
}

/// Position of `x` and `y` in a common chain, with the chain.
fn same_chain_positions(cp: &ChainPartition, x: usize, y: usize) -> Result<(Chain, usize, usize)> {
    let (cx, s) = cp.position(x);
    let (cy, t) = cp.position(y);
    if cx != cy {
        return Err(Error::NotSameChain { x, y });
    }
    Ok((cx, s, t))
}
