//! Weighted lattice-path counting inside a region and the path lemmas built
//! on it.
//!
//! The weight of a path segment is the sum over its East steps of the time at
//! which the step is taken: an East step leaving `(i, j)` contributes
//! `i + j + 1`.  Weights are additive under concatenation and the weight of
//! the path of a linear extension `L` is `sum_i L(alpha_i)`.

mod kappa;
mod levels;

use std::cell::OnceCell;

use num_bigint::BigUint;

use crate::poly::QPoly;
use crate::region::{GridPoint, Region, Step};

pub use kappa::{
    check_lemma_pairs, criss_cross_configs, criss_cross_delta2, kappa, pair_configs,
    verify_kappa_injective, CrissCrossConfig, LemmaPairEvidence, PairConfig,
};
pub use levels::{LevelAnchors, LevelDecomposition, STerm, STermParts};

/// `K_q(A, B)`: sum of `q^{weight}` over monotone paths `A -> B` inside `r`.
/// Zero when either endpoint is outside the region or `B` is not weakly
/// north-east of `A`.
pub fn count_paths_q(r: &Region, from: GridPoint, to: GridPoint) -> QPoly {
    if !r.contains(from) || !r.contains(to) || !from.weakly_below_left(to) {
        return QPoly::zero();
    }
    let table = sweep(r, from, to);
    table[table.len() - 1].clone()
}

/// `K(A, B)`: the number of monotone paths `A -> B` inside `r`.
pub fn count_paths(r: &Region, from: GridPoint, to: GridPoint) -> BigUint {
    count_paths_q(r, from, to).eval_one()
}

/// Column sweep over the rectangle spanned by `from` and `to`: the value at a
/// point is the value below it (arriving by a North step) plus `q^{w}` times
/// the value to its left (arriving by an East step of weight `w`).  Returns
/// the table indexed by `(x - from.x) * height + (y - from.y)`.
fn sweep(r: &Region, from: GridPoint, to: GridPoint) -> Vec<QPoly> {
    let width = (to.x - from.x + 1) as usize;
    let height = (to.y - from.y + 1) as usize;
    let mut table = vec![QPoly::zero(); width * height];
    for dx in 0..width {
        for dy in 0..height {
            let p = GridPoint::new(from.x + dx as i32, from.y + dy as i32);
            if !r.contains(p) {
                continue;
            }
            let mut val = if dx == 0 && dy == 0 {
                QPoly::one()
            } else {
                QPoly::zero()
            };
            if dy > 0 {
                val += &table[dx * height + dy - 1];
            }
            if dx > 0 {
                let left = &table[(dx - 1) * height + dy];
                if !left.is_zero() {
                    let w = Step::East.weight_from(p - GridPoint::EAST);
                    val += &left.shift(w);
                }
            }
            table[dx * height + dy] = val;
        }
    }
    table
}

/// Memoized `K_q` queries on one region: each source point is swept once
/// towards the far corner and every target is read off that table.
pub struct PathCounter<'r> {
    region: &'r Region,
    height: usize,
    cache: Vec<OnceCell<Vec<QPoly>>>,
}

impl<'r> PathCounter<'r> {
    pub fn new(region: &'r Region) -> Self {
        let width = region.a() + 1;
        let height = region.b() + 1;
        PathCounter {
            region,
            height,
            cache: (0..width * height).map(|_| OnceCell::new()).collect(),
        }
    }

    pub fn region(&self) -> &'r Region {
        self.region
    }

    /// `K_q(from, to)`.
    pub fn count(&self, from: GridPoint, to: GridPoint) -> QPoly {
        let r = self.region;
        if !r.contains(from) || !r.contains(to) || !from.weakly_below_left(to) {
            return QPoly::zero();
        }
        let idx = from.x as usize * self.height + from.y as usize;
        let table = self.cache[idx].get_or_init(|| sweep(r, from, r.corner()));
        let h = r.b() as i32 - from.y + 1;
        table[((to.x - from.x) * h + (to.y - from.y)) as usize].clone()
    }

    /// `K_q(A, B)` from the origin to the far corner: the q-count of all
    /// extension paths.
    pub fn total(&self) -> QPoly {
        self.count(GridPoint::ORIGIN, self.region.corner())
    }
}

/// Whether the vertical segment `P1 P2` lies on the lower boundary path.
/// Returns `false` for non-vertical segments.
pub fn segment_on_lower_boundary(r: &Region, p1: GridPoint, p2: GridPoint) -> bool {
    vertical_span(r, p1, p2).is_some_and(|(x, lo, hi)| {
        let xu = x as usize;
        r.lower_at(xu) as i32 <= lo && hi <= r.lower_at(xu + 1) as i32
    })
}

/// Whether the vertical segment `P1 P2` lies on the upper boundary path.
/// Returns `false` for non-vertical segments.
pub fn segment_on_upper_boundary(r: &Region, p1: GridPoint, p2: GridPoint) -> bool {
    vertical_span(r, p1, p2).is_some_and(|(x, lo, hi)| {
        let xu = x as usize;
        r.upper_at(xu) as i32 <= lo && hi <= r.upper_at(xu + 1) as i32
    })
}

fn vertical_span(r: &Region, p1: GridPoint, p2: GridPoint) -> Option<(i32, i32, i32)> {
    if p1.x != p2.x || r.column(p1.x).is_none() {
        return None;
    }
    Some((p1.x, p1.y.min(p2.y), p1.y.max(p2.y)))
}

/// How a forced point arises when two path pairs are equinumerous.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForcedCase {
    /// `E = A` and the segment `AB` lies on the lower boundary.
    LowerAnchor,
    /// `E = D` and the segment `CD` lies on the upper boundary.
    UpperAnchor,
    /// `E` lies on both boundaries (the region is pinched there).
    Pinch,
    /// A point every path passes through that matches none of the above;
    /// only possible when `CD` is not strictly east of `AB`.
    Other,
}

/// A point `E` through which every path in the two-pair comparison passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ForcedPoint {
    pub point: GridPoint,
    pub case: ForcedCase,
}

/// For `A` above `B` on one vertical line and `C` above `D` on a vertical line
/// to the east (coincident points make the equality trivial, with a
/// trivially forced endpoint): if `K_q(A,C) K_q(B,D) = K_q(B,C) K_q(A,D)`, returns a point `E`
/// with `K_q(X,Y) = K_q(X,E) K_q(E,Y)` for all four pairs, preferring the
/// anchored cases.  Returns `None` when the equality fails, when no such `E`
/// exists, or when the points are not in that configuration.
pub fn forced_point(
    r: &Region,
    a: GridPoint,
    b: GridPoint,
    c: GridPoint,
    d: GridPoint,
) -> Option<ForcedPoint> {
    if a.x != b.x || c.x != d.x || a.y < b.y || c.y < d.y || c.x < a.x {
        return None;
    }
    if ![a, b, c, d].iter().all(|&p| r.contains(p)) {
        return None;
    }
    let k = PathCounter::new(r);
    let (ac, bd, bc, ad) = (k.count(a, c), k.count(b, d), k.count(b, c), k.count(a, d));
    if &ac * &bd != &bc * &ad {
        return None;
    }
    let passes = |e: GridPoint| {
        let through = |from: GridPoint, to: GridPoint, whole: &QPoly| {
            &k.count(from, e) * &k.count(e, to) == *whole
        };
        through(a, c, &ac) && through(b, d, &bd) && through(b, c, &bc) && through(a, d, &ad)
    };
    if passes(a) && segment_on_lower_boundary(r, a, b) {
        return Some(ForcedPoint {
            point: a,
            case: ForcedCase::LowerAnchor,
        });
    }
    if passes(d) && segment_on_upper_boundary(r, c, d) {
        return Some(ForcedPoint {
            point: d,
            case: ForcedCase::UpperAnchor,
        });
    }
    let mut other = None;
    for x in a.x..=c.x {
        for y in b.y..=c.y {
            let e = GridPoint::new(x, y);
            if !r.contains(e) || !passes(e) {
                continue;
            }
            if segment_on_lower_boundary(r, e, e) && segment_on_upper_boundary(r, e, e) {
                return Some(ForcedPoint {
                    point: e,
                    case: ForcedCase::Pinch,
                });
            }
            other.get_or_insert(ForcedPoint {
                point: e,
                case: ForcedCase::Other,
            });
        }
    }
    other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::enumerate_regions;

    fn pt(x: i32, y: i32) -> GridPoint {
        GridPoint::new(x, y)
    }

    #[test]
    fn empty_path_and_rectangles() {
        let r = Region::full(2, 2);
        assert_eq!(count_paths_q(&r, pt(1, 1), pt(1, 1)), QPoly::one());
        assert_eq!(count_paths(&r, pt(0, 0), pt(2, 2)), BigUint::from(6u32));
        assert!(count_paths_q(&r, pt(2, 0), pt(1, 2)).is_zero());
        assert!(count_paths_q(&r, pt(0, 0), pt(3, 0)).is_zero());
    }

    #[test]
    fn counts_match_path_enumeration() {
        for a in 0..=4 {
            for b in 0..=4 {
                for r in enumerate_regions(a, b) {
                    let k = PathCounter::new(&r);
                    for x1 in 0..=a as i32 {
                        for y1 in 0..=b as i32 {
                            for x2 in x1..=a as i32 {
                                for y2 in y1..=b as i32 {
                                    let (p, q) = (pt(x1, y1), pt(x2, y2));
                                    let paths = r.paths_between(p, q);
                                    let expect =
                                        QPoly::from_terms(paths.iter().map(|z| (z.weight(), 1u32)));
                                    assert_eq!(k.count(p, q), expect);
                                    assert_eq!(count_paths_q(&r, p, q), expect);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn concatenation_through_a_point_is_dominated() {
        for r in enumerate_regions(3, 3) {
            let k = PathCounter::new(&r);
            let (o, q) = (GridPoint::ORIGIN, r.corner());
            for x in 0..=3 {
                for y in 0..=3 {
                    let e = pt(x, y);
                    let through = &k.count(o, e) * &k.count(e, q);
                    let all = k.total();
                    assert!(all.dominates(&through));
                    let every_path_passes = r.paths().iter().all(|p| p.points().contains(&e));
                    assert_eq!(through == all, every_path_passes);
                }
            }
        }
    }

    #[test]
    fn transposition_preserves_plain_counts() {
        for r in enumerate_regions(3, 2) {
            let t = r.transpose();
            for x in 0..=3 {
                for y in 0..=2 {
                    let p = pt(x, y);
                    assert_eq!(
                        count_paths(&r, GridPoint::ORIGIN, p),
                        count_paths(&t, GridPoint::ORIGIN, p.transpose())
                    );
                }
            }
        }
    }

    #[test]
    fn single_path_region_boundaries_coincide() {
        let r = Region::from_heights(3, vec![1, 1, 3], vec![1, 1, 3]).unwrap();
        let path = r.lower_path();
        let pts = path.points();
        for w in pts.windows(2) {
            if w[0].x == w[1].x {
                assert!(segment_on_lower_boundary(&r, w[0], w[1]));
                assert!(segment_on_upper_boundary(&r, w[0], w[1]));
            }
        }
        assert!(!segment_on_lower_boundary(&r, pt(0, 0), pt(1, 0)));
    }

    #[test]
    fn forced_points() {
        let r = Region::full(2, 1);
        assert_eq!(
            forced_point(&r, pt(0, 1), pt(0, 0), pt(2, 1), pt(2, 0)),
            None
        );
        // The single column-1 point (1, 1) pinches the region.
        let pinched = Region::from_heights(2, vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(pinched.column(1), Some((1, 1)));
        let f = forced_point(&pinched, pt(0, 1), pt(0, 0), pt(2, 2), pt(2, 1)).unwrap();
        assert_eq!(
            f,
            ForcedPoint {
                point: pt(0, 1),
                case: ForcedCase::LowerAnchor
            }
        );
        let f = forced_point(&pinched, pt(0, 1), pt(0, 0), pt(2, 2), pt(2, 2)).unwrap();
        assert_eq!(f.case, ForcedCase::LowerAnchor);
    }

    #[test]
    fn forced_point_classification_exhaustive() {
        // Strictly separated lines, A strictly above B, C strictly above D and
        // nonzero products: equality holds iff a
        // forced point exists, and it is always one of the three anchored cases.
        let mut seen = std::collections::BTreeSet::new();
        for a in 1..=3 {
            for b in 0..=3 {
                for r in enumerate_regions(a, b) {
                    let k = PathCounter::new(&r);
                    for x1 in 0..a as i32 {
                        for x2 in x1 + 1..=a as i32 {
                            for (yb, ya) in pairs(b as i32) {
                                for (yd, yc) in pairs(b as i32) {
                                    let (pa, pb, pc, pd) =
                                        (pt(x1, ya), pt(x1, yb), pt(x2, yc), pt(x2, yd));
                                    if ![pa, pb, pc, pd].iter().all(|&p| r.contains(p)) {
                                        continue;
                                    }
                                    let lhs = &k.count(pa, pc) * &k.count(pb, pd);
                                    let rhs = &k.count(pb, pc) * &k.count(pa, pd);
                                    assert!(lhs.dominates(&rhs));
                                    if rhs.is_zero() {
                                        continue;
                                    }
                                    let f = forced_point(&r, pa, pb, pc, pd);
                                    assert_eq!(lhs == rhs, f.is_some());
                                    if let Some(f) = f {
                                        assert_ne!(
                                            f.case,
                                            ForcedCase::Other,
                                            "{r:?} {pa} {pb} {pc} {pd} {f:?}"
                                        );
                                        seen.insert(format!("{:?}", f.case));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(seen.len(), 3, "{seen:?}");
    }

    fn pairs(b: i32) -> Vec<(i32, i32)> {
        (0..=b)
            .flat_map(|lo| (lo + 1..=b).map(move |hi| (lo, hi)))
            .collect()
    }
}
