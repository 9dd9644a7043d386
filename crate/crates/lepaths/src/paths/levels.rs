//! Level decomposition of the gap statistic for two elements of one chain.
//!
//! For `x` at position `s` and `y` at position `s + r` of the same chain,
//! `F_q(w; k)` is the q-count of extensions with `L(x) = w` and
//! `L(y) = w + k`.  Such a path crosses from the level of `x` at `Y^w` and
//! from the level of `y` at `V^{w+k}`, so `F_q(w; k)` factors into three path
//! counts.  Summing the combinations `S(u; w)` over `u >= w - 1` recovers
//! `2 (F_q(k)^2 - F_q(k-1) F_q(k+1))`, and each `S(u; w)` regroups into
//! products of two-pairs and criss-cross differences.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{QPoly, ZPoly};
use crate::poset::{Chain, ChainPartition};
use crate::region::{GridPoint, Region, Step};

use super::kappa::criss_cross_raw;
use super::PathCounter;

/// Chain positions `s` and `s + r` (`r >= 1`) of two elements `x < y` of the
/// same chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelAnchors {
    pub chain: Chain,
    pub s: usize,
    pub r: usize,
}

impl LevelAnchors {
    /// Anchors for `x` and `y`, which must lie on one chain with `x` below `y`.
    pub fn new(cp: &ChainPartition, x: usize, y: usize) -> Result<LevelAnchors> {
        let (cx, s) = cp.position(x);
        let (cy, t) = cp.position(y);
        if cx != cy {
            return Err(Error::NotSameChain { x, y });
        }
        if t <= s {
            return Err(Error::NotBelow { x, y });
        }
        Ok(LevelAnchors {
            chain: cx,
            s,
            r: t - s,
        })
    }

    /// The step each extension path takes at the levels of `x` and `y`.
    pub fn step(&self) -> Step {
        match self.chain {
            Chain::First => Step::East,
            Chain::Second => Step::North,
        }
    }

    fn point(&self, pos: usize, u: i64) -> GridPoint {
        let along = (pos - 1) as i64;
        let across = u - pos as i64;
        let (x, y) = match self.chain {
            Chain::First => (along, across),
            Chain::Second => (across, along),
        };
        GridPoint::new(x as i32, y as i32)
    }

    /// `Y^u`: the point a path leaves with the step of `x` when `L(x) = u`.
    pub fn y_point(&self, u: i64) -> GridPoint {
        self.point(self.s, u)
    }

    /// `V^u`: the point a path leaves with the step of `y` when `L(y) = u`.
    pub fn v_point(&self, u: i64) -> GridPoint {
        self.point(self.s + self.r, u)
    }

    fn after(&self, p: GridPoint) -> GridPoint {
        p + self.step().vector()
    }

    fn step_weight(&self, p: GridPoint) -> u32 {
        self.step().weight_from(p)
    }

    /// Value at `x` (or `y`) of an extension path given by its East-step heights.
    fn rank_at(&self, heights: &[u32], pos: usize) -> i64 {
        match self.chain {
            Chain::First => pos as i64 + heights[pos - 1] as i64,
            Chain::Second => {
                pos as i64 + heights.iter().filter(|&&h| (h as usize) < pos).count() as i64
            }
        }
    }
}

/// The pieces of `S(u; w)` for `u >= w`:
/// `S = q^shift (d1a * d1b + k0 * d1c * d1d + k0 * d2 * tail)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STermParts {
    pub shift: u32,
    /// `K(0,A1')K(0,B1') - K(0,A1)K(0,B1)`.
    pub d1a: ZPoly,
    /// `K(A',C')K(B',D')K(C1',Q)K(D1',Q) - K(A',C)K(B',D)K(C1,Q)K(D1,Q)`.
    pub d1b: ZPoly,
    /// `K(A',C')K(B',D') - K(A,C')K(B,D')`.
    pub d1c: ZPoly,
    /// `K(C1',Q)K(D1',Q) - K(C1,Q)K(D1,Q)`.
    pub d1d: ZPoly,
    /// The criss-cross combination on `A, A', B, B'` and `C, C', D, D'`.
    pub d2: ZPoly,
    /// `K(0,A1)K(0,B1)`.
    pub k0: QPoly,
    /// `K(C1,Q)K(D1,Q)`.
    pub tail: QPoly,
}

impl STermParts {
    pub fn total(&self) -> ZPoly {
        let k0 = self.k0.to_zpoly();
        let sum = &(&(&self.d1a * &self.d1b) + &(&(&k0 * &self.d1c) * &self.d1d))
            + &(&(&k0 * &self.d2) * &self.tail.to_zpoly());
        sum.shift(self.shift)
    }
}

/// `S(u; w)` rebuilt from path counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum STerm {
    /// `u >= w`.
    Regrouped(STermParts),
    /// `u = w - 1`: `S = 2 q^shift k0 tail (K(Y,V)K(Y',V') - K(Y',V)K(Y,V'))`.
    Diagonal {
        shift: u32,
        k0: QPoly,
        tail: QPoly,
        lgv: ZPoly,
    },
}

impl STerm {
    pub fn total(&self) -> ZPoly {
        match self {
            STerm::Regrouped(parts) => parts.total(),
            STerm::Diagonal {
                shift,
                k0,
                tail,
                lgv,
            } => {
                let two = ZPoly::monomial(0, 2);
                (&(&two * &(k0 * tail).to_zpoly()) * lgv).shift(*shift)
            }
        }
    }
}

/// The level tables of one region and one pair of anchors: `F_q(w; k)` both
/// from the three-factor formula and from direct path enumeration.
pub struct LevelDecomposition<'r> {
    region: &'r Region,
    anchors: LevelAnchors,
    counter: PathCounter<'r>,
    brute: BTreeMap<(i64, i64), QPoly>,
}

impl<'r> LevelDecomposition<'r> {
    pub fn new(region: &'r Region, anchors: LevelAnchors) -> Result<Self> {
        let len = match anchors.chain {
            Chain::First => region.a(),
            Chain::Second => region.b(),
        };
        if anchors.s == 0 || anchors.r == 0 || anchors.s + anchors.r > len {
            return Err(Error::GeometryMismatch(format!(
                "positions {} and {} do not fit a chain of length {len}",
                anchors.s,
                anchors.s + anchors.r
            )));
        }
        let mut brute: BTreeMap<(i64, i64), QPoly> = BTreeMap::new();
        let bottom: u32 = (1..=region.a() as u32).sum();
        region.for_each_path_heights(|e| {
            let lx = anchors.rank_at(e, anchors.s);
            let ly = anchors.rank_at(e, anchors.s + anchors.r);
            let wgt = bottom + e.iter().sum::<u32>();
            brute.entry((lx, ly - lx)).or_default().add_term(wgt, 1);
        });
        Ok(LevelDecomposition {
            region,
            anchors,
            counter: PathCounter::new(region),
            brute,
        })
    }

    pub fn anchors(&self) -> LevelAnchors {
        self.anchors
    }

    pub fn region(&self) -> &'r Region {
        self.region
    }

    /// `n = a + b`.
    pub fn size(&self) -> i64 {
        (self.region.a() + self.region.b()) as i64
    }

    fn k(&self, from: GridPoint, to: GridPoint) -> QPoly {
        self.counter.count(from, to)
    }

    fn origin_to(&self, p: GridPoint) -> QPoly {
        self.k(GridPoint::ORIGIN, p)
    }

    fn to_corner(&self, p: GridPoint) -> QPoly {
        self.k(p, self.region.corner())
    }

    /// Weight of the two anchor steps of a path with `L(x) = w`, `L(y) = w + k`.
    fn fixed(&self, w: i64, k: i64) -> u32 {
        let an = &self.anchors;
        an.step_weight(an.y_point(w)) + an.step_weight(an.v_point(w + k))
    }

    /// `F_q(w; k)` from the factorization
    /// `q^fixed K(0, Y^w) K(Y^w + step, V^{w+k}) K(V^{w+k} + step, Q)`.
    pub fn level(&self, w: i64, k: i64) -> QPoly {
        let an = &self.anchors;
        let (y, v) = (an.y_point(w), an.v_point(w + k));
        if !self.region.contains(y) || !self.region.contains(v) {
            return QPoly::zero();
        }
        let prod = &(&self.origin_to(y) * &self.k(an.after(y), v)) * &self.to_corner(an.after(v));
        if prod.is_zero() {
            return prod;
        }
        prod.shift(self.fixed(w, k))
    }

    /// `F_q(w; k)` by direct enumeration of extension paths.
    pub fn level_brute(&self, w: i64, k: i64) -> QPoly {
        self.brute.get(&(w, k)).cloned().unwrap_or_default()
    }

    /// `F_q(k) = sum_w F_q(w; k)` from the factorization.
    pub fn gap(&self, k: i64) -> QPoly {
        let mut total = QPoly::zero();
        for w in 1..=self.size() {
            total += &self.level(w, k);
        }
        total
    }

    /// `F_q(k)^2 - F_q(k-1) F_q(k+1)`.
    pub fn delta(&self, k: i64) -> ZPoly {
        let f = self.gap(k);
        &(&f * &f) - &(&self.gap(k - 1) * &self.gap(k + 1))
    }

    /// `S(u; w)` from the enumerated level table.
    pub fn s_direct(&self, u: i64, w: i64, k: i64) -> ZPoly {
        let f = |v: i64, j: i64| self.level_brute(v, j);
        let plus = &(&f(u, k) * &f(w, k)) + &(&f(w - 1, k) * &f(u + 1, k));
        let minus = &(&f(u, k + 1) * &f(w, k - 1)) + &(&f(u + 1, k - 1) * &f(w - 1, k + 1));
        &plus - &minus
    }

    /// `S(u; w)` regrouped into two-pairs, LGV and criss-cross differences
    /// (`u >= w - 1`).
    ///
    /// # Panics
    /// If `u < w - 1`, or if the four products of `S` do not share one
    /// anchor-step weight.
    pub fn s_regrouped(&self, u: i64, w: i64, k: i64) -> STerm {
        assert!(u >= w - 1, "S(u; w) is only regrouped for u >= w - 1");
        let an = &self.anchors;
        let shift = self.fixed(u, k) + self.fixed(w, k);
        assert_eq!(shift, self.fixed(w - 1, k) + self.fixed(u + 1, k));
        assert_eq!(shift, self.fixed(u, k + 1) + self.fixed(w, k - 1));
        assert_eq!(shift, self.fixed(u + 1, k - 1) + self.fixed(w - 1, k + 1));
        if u == w - 1 {
            let (y_hi, y_lo) = (an.after(an.y_point(w)), an.after(an.y_point(u)));
            let (v_hi, v_lo) = (an.v_point(u + k + 1), an.v_point(u + k));
            let k0 = &self.origin_to(an.y_point(w)) * &self.origin_to(an.y_point(u));
            let tail = &self.to_corner(an.after(v_hi)) * &self.to_corner(an.after(v_lo));
            let lgv = &(&self.k(y_hi, v_hi) * &self.k(y_lo, v_lo))
                - &(&self.k(y_lo, v_hi) * &self.k(y_hi, v_lo));
            return STerm::Diagonal {
                shift,
                k0,
                tail,
                lgv,
            };
        }
        let (a1, a1p) = (an.y_point(u + 1), an.y_point(u));
        let (b1, b1p) = (an.y_point(w - 1), an.y_point(w));
        let (a, ap, b, bp) = (an.after(a1), an.after(a1p), an.after(b1), an.after(b1p));
        let (c, cp) = (an.v_point(u + k + 1), an.v_point(u + k));
        let (d, dp) = (an.v_point(w + k - 1), an.v_point(w + k));
        let (c1, c1p, d1, d1p) = (an.after(c), an.after(cp), an.after(d), an.after(dp));

        let k0 = &self.origin_to(a1) * &self.origin_to(b1);
        let k0p = &self.origin_to(a1p) * &self.origin_to(b1p);
        let tail = &self.to_corner(c1) * &self.to_corner(d1);
        let tailp = &self.to_corner(c1p) * &self.to_corner(d1p);
        let mid_pp = &self.k(ap, cp) * &self.k(bp, dp);
        let mid_p = &self.k(ap, c) * &self.k(bp, d);
        let mid_z = &self.k(a, cp) * &self.k(b, dp);
        STerm::Regrouped(STermParts {
            shift,
            d1a: &k0p - &k0,
            d1b: &(&mid_pp * &tailp) - &(&mid_p * &tail),
            d1c: &mid_pp - &mid_z,
            d1d: &tailp - &tail,
            d2: criss_cross_raw(&self.counter, [a, ap, b, bp], [c, cp, d, dp]),
            k0,
            tail,
        })
    }

    /// `2 sum_{u >= w} S(u; w) + sum_w S(w - 1; w)` over the nonzero range,
    /// with each `S` taken from `term`.
    pub fn sum_of_terms(&self, term: impl Fn(i64, i64) -> ZPoly) -> ZPoly {
        let n = self.size();
        let two = ZPoly::monomial(0, 2);
        let mut total = ZPoly::zero();
        for w in 1..=n + 1 {
            total = &total + &term(w - 1, w);
            for u in w..=n {
                total = &total + &(&two * &term(u, w));
            }
        }
        total
    }
}
