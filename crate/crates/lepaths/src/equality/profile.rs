//! Level geometry of a same-chain pair in a width-two poset.

use crate::error::{Error, Result};
use crate::poset::{Chain, ChainPartition, Poset};
use crate::region::region_of;

use super::{chain_elem, same_chain_positions, Elem};

/// Extreme feasible levels around `x = alpha_s` and `y = alpha_{s+r}`:
///
/// * `u0` / `u3`: smallest / largest value of `L(x)`;
/// * `u1 - 1`: largest value of `L(alpha_{s-1})`;
/// * `u2 + 1`: smallest value of `L(alpha_{s+1})`;
/// * `w0..w3`: the same for `y`, shifted down by `k`;
///
/// with the virtual bottom at rank `0` and top at rank `n + 1`.  `vmin`,
/// `vmax` bound the levels `v` with an extension `L(x) = v`,
/// `L(y) = v + k`, or are `None` when there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LevelProfile {
    pub k: i64,
    pub u: [i64; 4],
    pub w: [i64; 4],
    pub vmin: Option<i64>,
    pub vmax: Option<i64>,
}

/// Reads the profile off the boundaries of the region: with
/// `L(alpha_h) = h + e_h` and `D_h <= e_h <= U_h`,
/// `u0 = s + D_s`, `u1 = s + U_{s-1}`, `u2 = s + D_{s+1}`, `u3 = s + U_s`.
/// For `x, y` in the second chain the partition is swapped first.
pub fn level_profile(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
    k: i64,
) -> Result<LevelProfile> {
    let (which, s, t) = same_chain_positions(cp, x, y)?;
    if s >= t {
        return Err(Error::NotBelow { x, y });
    }
    let cp = if which == Chain::First {
        cp.clone()
    } else {
        cp.swapped()
    };
    let r = region_of(p, &cp);
    let levels = |s: usize| -> [i64; 4] {
        let base = s as i64;
        [
            base + r.lower_at(s) as i64,
            base + r.upper_at(s - 1) as i64,
            base + r.lower_at(s + 1) as i64,
            base + r.upper_at(s) as i64,
        ]
    };
    let u = levels(s);
    let w = levels(t).map(|v| v - k);
    // With both ranks feasible on their own, the pair is feasible iff the
    // heights e_s = v - s <= e_t = v + k - t are ordered, i.e. k >= t - s.
    let (lo, hi) = (u[0].max(w[0]), u[3].min(w[3]));
    let feasible = lo <= hi && k >= (t - s) as i64;
    Ok(LevelProfile {
        k,
        u,
        w,
        vmin: feasible.then_some(lo),
        vmax: feasible.then_some(hi),
    })
}

/// The integer-interval form of the `k`-midway property for
/// `x = alpha_s`, `y = alpha_{s+r}` in one chain: integers `1 < c < d <= n`
/// with
///
/// * `alpha_{s-1} < beta_{c-s} < ... < beta_{d-s} < alpha_{s+1}`,
/// * `beta_{c+k-r-s} < alpha_{s+r} < beta_{d+k-r-s}`,
/// * `alpha_s || beta_j` for `c - s <= j <= d - s`,
/// * `alpha_{s+r} || beta_j` for `c + k - r - s < j < d + k - r - s`.
///
/// Returns the first `(c, d)` found.  Chain indices out of range resolve to
/// the virtual bottom/top.  The form characterises the midway property for
/// `r >= 2`; for adjacent elements (`r = 1`) the midway property can hold
/// without any such interval.
pub fn midway_interval(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
    k: i64,
) -> Result<Option<(i64, i64)>> {
    let (which, s, t) = same_chain_positions(cp, x, y)?;
    if s >= t {
        return Err(Error::NotBelow { x, y });
    }
    let own = cp.chain(which);
    let other = cp.chain(which.other());
    let (s, r, n) = (s as i64, (t - s) as i64, p.len() as i64);
    let a = |i: i64| chain_elem(own, i);
    let b = |j: i64| chain_elem(other, j);
    let (xe, ye) = (Elem::Real(x), Elem::Real(y));
    for c in 2..=n {
        for d in c + 1..=n {
            let strip = (c - s..=d - s).map(b);
            let ok = a(s - 1).lt(b(c - s), p)
                && b(d - s).lt(a(s + 1), p)
                && strip.clone().all(|e| matches!(e, Elem::Real(_)))
                && strip.clone().zip(strip.skip(1)).all(|(e, f)| e.lt(f, p))
                && b(c + k - r - s).lt(ye, p)
                && ye.lt(b(d + k - r - s), p)
                && (c - s..=d - s).all(|j| xe.incomparable(b(j), p))
                && (c + k - r - s + 1..d + k - r - s).all(|j| ye.incomparable(b(j), p));
            if ok {
                return Ok(Some((c, d)));
            }
        }
    }
    Ok(None)
}
