//! The tail-swapping injection between pairs of paths and the criss-cross
//! comparison of sums of path pairs.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{QPoly, ZPoly};
use crate::region::{GridPoint, NEPath, Region};

use super::PathCounter;

/// Six points for the two-pairs comparison: `A`, `A'`, `B'`, `B` on one
/// vertical line with `A` at or above `A'`, `A - A' = B' - B` and `A'` at or
/// above `B`; `C`, `D` on a vertical line weakly to the east with
/// `a'_2 - b_2 >= c_2 - d_2`.  Under these conditions
/// `K_q(A',C) K_q(B',D) >= K_q(A,C) K_q(B,D)` coefficientwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairConfig {
    pub a: GridPoint,
    pub a_prime: GridPoint,
    pub b: GridPoint,
    pub b_prime: GridPoint,
    pub c: GridPoint,
    pub d: GridPoint,
}

impl PairConfig {
    /// Checks the geometric hypotheses and that all six points lie in `r`.
    pub fn validate(&self, r: &Region) -> Result<()> {
        let bad = |msg: &str| Err(Error::GeometryMismatch(msg.to_string()));
        let x = self.a.x;
        if self.a_prime.x != x || self.b.x != x || self.b_prime.x != x {
            return bad("A, A', B, B' must share one vertical line");
        }
        if self.a.y < self.a_prime.y {
            return bad("A must lie on or above A'");
        }
        if self.a.y - self.a_prime.y != self.b_prime.y - self.b.y {
            return bad("the shift A -> A' must be the reverse of B -> B'");
        }
        if self.a_prime.y < self.b.y {
            return bad("A' must lie on or above B");
        }
        if self.c.x != self.d.x || self.c.x < x {
            return bad("C and D must share a vertical line weakly east of A");
        }
        if self.a_prime.y - self.b.y < self.c.y - self.d.y {
            return bad("the gap A' - B must be at least the gap C - D");
        }
        let pts = [self.a, self.a_prime, self.b, self.b_prime, self.c, self.d];
        if let Some(p) = pts.iter().find(|&&p| !r.contains(p)) {
            return Err(Error::GeometryMismatch(format!(
                "point {p} lies outside the region"
            )));
        }
        Ok(())
    }

    /// `v = A' - B`, the translation carrying paths from `B` to paths from `A'`.
    pub fn translation(&self) -> GridPoint {
        self.a_prime - self.b
    }
}

/// Maps a pair `(gamma: A -> C, delta: B -> D)` of region paths to a pair
/// `(gamma': A' -> C, delta': B' -> D)` of region paths with the same total
/// weight.  `delta` is translated by `v = A' - B` to `delta^`; with `E` the
/// first point of `gamma` on `delta^`, `gamma'` follows `delta^` up to `E`
/// and then `gamma`, while `delta'` follows `gamma` up to `E`, then `delta^`,
/// translated back by `-v`.
///
/// # Panics
/// If `gamma` and `delta^` do not meet, which the hypotheses rule out.
pub fn kappa(
    r: &Region,
    cfg: &PairConfig,
    gamma: &NEPath,
    delta: &NEPath,
) -> Result<(NEPath, NEPath)> {
    cfg.validate(r)?;
    if gamma.start() != cfg.a || gamma.end() != cfg.c || !r.contains_path(gamma) {
        return Err(Error::NotExtensionPath(
            "the first path must run from A to C inside the region".into(),
        ));
    }
    if delta.start() != cfg.b || delta.end() != cfg.d || !r.contains_path(delta) {
        return Err(Error::NotExtensionPath(
            "the second path must run from B to D inside the region".into(),
        ));
    }
    let v = cfg.translation();
    let hat = delta.translate(v);
    let hat_pts = hat.points();
    let (i, j) = gamma
        .points()
        .iter()
        .enumerate()
        .find_map(|(i, p)| hat_pts.iter().position(|q| q == p).map(|j| (i, j)))
        .expect("a path from A to C must meet the translated path from A' to D'");
    let g_len = gamma.steps().len();
    let h_len = hat.steps().len();
    let gamma_new = hat
        .segment(0, j)
        .concat(&gamma.segment(i, g_len))
        .expect("segments meet at E");
    let delta_new = gamma
        .segment(0, i)
        .concat(&hat.segment(j, h_len))
        .expect("segments meet at E")
        .translate(GridPoint::ORIGIN - v);
    Ok((gamma_new, delta_new))
}

/// Both sides of the two-pairs inequality for one configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaPairEvidence {
    /// `K_q(A',C) K_q(B',D)`.
    pub lhs: QPoly,
    /// `K_q(A,C) K_q(B,D)`.
    pub rhs: QPoly,
    /// `lhs - rhs`, coefficientwise nonnegative when the inequality holds.
    pub difference: ZPoly,
}

impl LemmaPairEvidence {
    pub fn holds(&self) -> bool {
        self.difference.is_nonnegative()
    }
}

/// Evaluates both sides of the two-pairs inequality for a validated configuration.
pub fn check_lemma_pairs(r: &Region, cfg: &PairConfig) -> Result<LemmaPairEvidence> {
    cfg.validate(r)?;
    let k = PathCounter::new(r);
    Ok(pair_evidence(&k, cfg))
}

pub(crate) fn pair_evidence(k: &PathCounter<'_>, cfg: &PairConfig) -> LemmaPairEvidence {
    let lhs = &k.count(cfg.a_prime, cfg.c) * &k.count(cfg.b_prime, cfg.d);
    let rhs = &k.count(cfg.a, cfg.c) * &k.count(cfg.b, cfg.d);
    let difference = &lhs - &rhs;
    LemmaPairEvidence {
        lhs,
        rhs,
        difference,
    }
}

/// Eight points for the criss-cross comparison: `A` (top), `A'`, `B'`, `B`
/// (bottom) on one vertical line and `C`, `C'`, `D'`, `D` on a vertical line
/// weakly to the east, with `A - A' = B' - B = C - C' = D' - D = (0, t)` and
/// `A - B = C - D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CrissCrossConfig {
    pub a: GridPoint,
    pub b: GridPoint,
    pub c: GridPoint,
    pub t: i32,
}

impl CrissCrossConfig {
    pub fn a_prime(&self) -> GridPoint {
        self.a - GridPoint::new(0, self.t)
    }

    pub fn b_prime(&self) -> GridPoint {
        self.b + GridPoint::new(0, self.t)
    }

    pub fn c_prime(&self) -> GridPoint {
        self.c - GridPoint::new(0, self.t)
    }

    pub fn d(&self) -> GridPoint {
        self.c - (self.a - self.b)
    }

    pub fn d_prime(&self) -> GridPoint {
        self.d() + GridPoint::new(0, self.t)
    }

    pub fn points(&self) -> [GridPoint; 8] {
        [
            self.a,
            self.a_prime(),
            self.b_prime(),
            self.b,
            self.c,
            self.c_prime(),
            self.d_prime(),
            self.d(),
        ]
    }

    pub fn validate(&self, r: &Region) -> Result<()> {
        let bad = |msg: &str| Err(Error::GeometryMismatch(msg.to_string()));
        if self.a.x != self.b.x {
            return bad("A and B must share a vertical line");
        }
        if self.c.x < self.a.x {
            return bad("C must lie weakly east of A");
        }
        if self.a.y < self.b.y {
            return bad("A must lie on or above B");
        }
        if self.t < 0 || self.t > self.a.y - self.b.y {
            return bad("the shift must lie between 0 and the height of AB");
        }
        if let Some(p) = self.points().iter().find(|&&p| !r.contains(p)) {
            return Err(Error::GeometryMismatch(format!(
                "point {p} lies outside the region"
            )));
        }
        Ok(())
    }
}

/// `K_q(A,C)K_q(B,D) + K_q(A',C')K_q(B',D') - K_q(A',C)K_q(B',D) - K_q(A,C')K_q(B,D')`,
/// coefficientwise nonnegative on every valid configuration.
pub fn criss_cross_delta2(r: &Region, cfg: &CrissCrossConfig) -> Result<ZPoly> {
    cfg.validate(r)?;
    let k = PathCounter::new(r);
    Ok(criss_cross_raw(
        &k,
        [cfg.a, cfg.a_prime(), cfg.b, cfg.b_prime()],
        [cfg.c, cfg.c_prime(), cfg.d(), cfg.d_prime()],
    ))
}

/// The criss-cross combination for `[A, A', B, B']` and `[C, C', D, D']`
/// without any geometric checks.
pub(crate) fn criss_cross_raw(
    k: &PathCounter<'_>,
    left: [GridPoint; 4],
    right: [GridPoint; 4],
) -> ZPoly {
    let [a, a1, b, b1] = left;
    let [c, c1, d, d1] = right;
    let plus = &(&k.count(a, c) * &k.count(b, d)) + &(&k.count(a1, c1) * &k.count(b1, d1));
    let minus = &(&k.count(a1, c) * &k.count(b1, d)) + &(&k.count(a, c1) * &k.count(b, d1));
    &plus - &minus
}

/// Applies [`kappa`] to every pair in the domain of `cfg` and checks that the
/// images are distinct, weight-preserving region paths with the right
/// endpoints.  Returns the domain size.
pub fn verify_kappa_injective(r: &Region, cfg: &PairConfig) -> Result<usize> {
    cfg.validate(r)?;
    let gammas = r.paths_between(cfg.a, cfg.c);
    let deltas = r.paths_between(cfg.b, cfg.d);
    let mut images = HashSet::with_capacity(gammas.len() * deltas.len());
    for g in &gammas {
        for d in &deltas {
            let (g2, d2) = kappa(r, cfg, g, d)?;
            let ok = g2.start() == cfg.a_prime
                && g2.end() == cfg.c
                && d2.start() == cfg.b_prime
                && d2.end() == cfg.d
                && r.contains_path(&g2)
                && r.contains_path(&d2)
                && g2.weight() + d2.weight() == g.weight() + d.weight();
            if !ok {
                return Err(Error::GeometryMismatch(format!(
                    "image of ({g}, {d}) is not a valid pair"
                )));
            }
            if !images.insert((g2, d2)) {
                return Err(Error::GeometryMismatch(format!(
                    "image of ({g}, {d}) is repeated"
                )));
            }
        }
    }
    Ok(gammas.len() * deltas.len())
}

/// Every valid two-pairs configuration in `r`.
pub fn pair_configs(r: &Region) -> Vec<PairConfig> {
    let mut out = Vec::new();
    let a = r.a() as i32;
    for x in 0..=a {
        let (lo, hi) = r.column(x).expect("column in range");
        for yb in lo..=hi {
            for ya1 in yb..=hi {
                for t in 0..=hi - ya1 {
                    let cfg0 = (GridPoint::new(x, ya1 + t), GridPoint::new(x, ya1));
                    let (pb, pb1) = (GridPoint::new(x, yb), GridPoint::new(x, yb + t));
                    for x2 in x..=a {
                        let (lo2, hi2) = r.column(x2).expect("column in range");
                        for yd in lo2..=hi2 {
                            for yc in yd..=hi2.min(yd + ya1 - yb) {
                                let cfg = PairConfig {
                                    a: cfg0.0,
                                    a_prime: cfg0.1,
                                    b: pb,
                                    b_prime: pb1,
                                    c: GridPoint::new(x2, yc),
                                    d: GridPoint::new(x2, yd),
                                };
                                if cfg.validate(r).is_ok() {
                                    out.push(cfg);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every valid criss-cross configuration in `r` with `C` strictly east of `A`.
pub fn criss_cross_configs(r: &Region) -> Vec<CrissCrossConfig> {
    let mut out = Vec::new();
    let a = r.a() as i32;
    for x in 0..=a {
        let (lo, hi) = r.column(x).expect("column in range");
        for yb in lo..=hi {
            for ya in yb..=hi {
                for x2 in x + 1..=a {
                    let (lo2, hi2) = r.column(x2).expect("column in range");
                    for yc in lo2 + (ya - yb)..=hi2 {
                        for t in 0..=ya - yb {
                            let cfg = CrissCrossConfig {
                                a: GridPoint::new(x, ya),
                                b: GridPoint::new(x, yb),
                                c: GridPoint::new(x2, yc),
                                t,
                            };
                            if cfg.validate(r).is_ok() {
                                out.push(cfg);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::enumerate_regions;

    fn pt(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    #[test]
    fn validation_rejects_bad_geometry() {
        let r = Region::full(3, 3);
        let good = PairConfig {
            a: pt(0, 3),
            a_prime: pt(0, 2),
            b: pt(0, 0),
            b_prime: pt(0, 1),
            c: pt(2, 3),
            d: pt(2, 1),
        };
        assert!(good.validate(&r).is_ok());
        let mut bad = good;
        bad.b_prime = pt(0, 2);
        assert!(matches!(bad.validate(&r), Err(Error::GeometryMismatch(_))));
        let mut bad = good;
        bad.d = pt(2, 0);
        assert!(bad.validate(&r).is_err());
        let mut bad = good;
        bad.c = pt(1, 3);
        assert!(bad.validate(&r).is_err());
        let g = NEPath::parse(pt(0, 0), "EE").unwrap();
        let d = NEPath::parse(pt(0, 0), "EE").unwrap();
        assert!(matches!(
            kappa(&r, &good, &g, &d),
            Err(Error::NotExtensionPath(_))
        ));
    }

    #[test]
    fn kappa_small_example() {
        let r = Region::full(2, 2);
        let cfg = PairConfig {
            a: pt(0, 1),
            a_prime: pt(0, 1),
            b: pt(0, 0),
            b_prime: pt(0, 0),
            c: pt(2, 2),
            d: pt(2, 1),
        };
        let g = NEPath::parse(pt(0, 1), "EEN").unwrap();
        let d = NEPath::parse(pt(0, 0), "NEE").unwrap();
        let (g2, d2) = kappa(&r, &cfg, &g, &d).unwrap();
        assert_eq!(g2.start(), pt(0, 1));
        assert_eq!(d2.start(), pt(0, 0));
        assert_eq!(g2.weight() + d2.weight(), g.weight() + d.weight());
    }

    #[test]
    fn kappa_is_a_weight_preserving_injection() {
        let mut configs = 0usize;
        let mut pairs = 0usize;
        for a in 0..=3 {
            for b in 0..=3 {
                for r in enumerate_regions(a, b) {
                    for cfg in pair_configs(&r) {
                        pairs += verify_kappa_injective(&r, &cfg).unwrap();
                        configs += 1;
                        assert!(check_lemma_pairs(&r, &cfg).unwrap().holds());
                    }
                }
            }
        }
        assert!(configs > 1000 && pairs > configs);
    }

    fn equality_at_one(r: &Region, cfg: &PairConfig) -> bool {
        let ev = check_lemma_pairs(r, cfg).unwrap();
        let (l, h) = (ev.lhs.eval_one(), ev.rhs.eval_one());
        l == h && l != 0u32.into()
    }

    #[test]
    fn equality_forces_lower_boundary() {
        let mut hits = 0;
        for a in 1..=4 {
            for b in 0..=4 {
                for r in enumerate_regions(a, b) {
                    for cfg in pair_configs(&r) {
                        let strict = cfg.a.y > cfg.a_prime.y
                            && cfg.c.x > cfg.a.x
                            && cfg.a_prime.y - cfg.b.y > cfg.c.y - cfg.d.y;
                        if strict && equality_at_one(&r, &cfg) {
                            hits += 1;
                            assert!(
                                super::super::segment_on_lower_boundary(&r, cfg.a, cfg.b),
                                "{cfg:?} in {r:?}"
                            );
                        }
                    }
                }
            }
        }
        assert!(hits > 0);
    }

    #[test]
    fn equality_at_one_splits_into_factor_equalities() {
        let mut bad = 0;
        for a in 1..=3 {
            for b in 0..=3 {
                for r in enumerate_regions(a, b) {
                    let k = super::super::PathCounter::new(&r);
                    for cfg in pair_configs(&r) {
                        // Without slack in the gaps, A' = B with C = D gives equal
                        // products whose factors differ.
                        if cfg.a_prime.y - cfg.b.y == cfg.c.y - cfg.d.y {
                            continue;
                        }
                        let ev = check_lemma_pairs(&r, &cfg).unwrap();
                        let zero = ev.lhs.is_zero() && ev.rhs.is_zero();
                        let factors = k.count(cfg.a_prime, cfg.c) == k.count(cfg.a, cfg.c)
                            && k.count(cfg.b_prime, cfg.d) == k.count(cfg.b, cfg.d);
                        if (ev.lhs.eval_one() == ev.rhs.eval_one()) != (zero || factors) {
                            bad += 1;
                            if bad < 5 {
                                eprintln!("{cfg:?} {r:?} {} {}", ev.lhs, ev.rhs);
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(bad, 0);
    }

    #[test]
    fn equality_without_gap_slack_need_not_touch_the_boundary() {
        // With A' = B and C = D both sides count the same pairs, whatever the
        // position of AB relative to the boundary.
        let r = Region::full(2, 2);
        let cfg = PairConfig {
            a: pt(0, 2),
            a_prime: pt(0, 1),
            b: pt(0, 1),
            b_prime: pt(0, 2),
            c: pt(2, 2),
            d: pt(2, 2),
        };
        assert!(equality_at_one(&r, &cfg));
        assert!(!super::super::segment_on_lower_boundary(&r, cfg.a, cfg.b));
    }

    #[test]
    fn criss_cross_nonnegative() {
        for a in 1..=3 {
            for b in 0..=3 {
                for r in enumerate_regions(a, b) {
                    for cfg in criss_cross_configs(&r) {
                        let d = criss_cross_delta2(&r, &cfg).unwrap();
                        assert!(d.is_nonnegative(), "{cfg:?} in {r:?}: {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn criss_cross_validation() {
        let r = Region::full(2, 2);
        let cfg = CrissCrossConfig {
            a: pt(0, 2),
            b: pt(0, 0),
            c: pt(1, 2),
            t: 3,
        };
        assert!(criss_cross_delta2(&r, &cfg).is_err());
        let cfg = CrissCrossConfig {
            a: pt(0, 2),
            b: pt(0, 0),
            c: pt(1, 1),
            t: 1,
        };
        assert!(criss_cross_delta2(&r, &cfg).is_err());
        let cfg = CrissCrossConfig {
            a: pt(0, 2),
            b: pt(0, 0),
            c: pt(1, 2),
            t: 1,
        };
        assert_eq!(criss_cross_delta2(&r, &cfg).unwrap(), ZPoly::monomial(4, 2));
    }
}
