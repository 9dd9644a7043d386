//! Dense per-region tables for exhaustive scans.
//!
//! Every extension path of a region is enumerated once and its ranks and
//! weight recorded; the `q`-tables of any element or pair are then
//! accumulated as dense coefficient rows over the region's weight window
//! `[wgt(lower boundary), wgt(upper boundary)]`.

use crate::poly::QPoly;
use crate::region::Region;

/// Ranks and weights of all extension paths of one region.  Element ids
/// follow [`crate::region::poset_of_region`]: `alpha_h = h - 1`,
/// `beta_k = a + k - 1`.
pub struct RegionTables {
    n: usize,
    low: u32,
    width: usize,
    /// `ranks[path * n + u]`.
    ranks: Vec<u8>,
    weights: Vec<u32>,
}

impl RegionTables {
    pub fn new(r: &Region) -> RegionTables {
        let (a, b) = (r.a(), r.b());
        let n = a + b;
        let bottom: u32 = (1..=a as u32).sum();
        let low = bottom + r.lower_heights().iter().sum::<u32>();
        let high = bottom + r.upper_heights().iter().sum::<u32>();
        let mut ranks = Vec::new();
        let mut weights = Vec::new();
        r.for_each_path_heights(|e| {
            for (h, &eh) in e.iter().enumerate() {
                ranks.push((h as u32 + 1 + eh) as u8);
            }
            for k in 1..=b as u32 {
                ranks.push((k + e.iter().filter(|&&h| h < k).count() as u32) as u8);
            }
            weights.push(bottom + e.iter().sum::<u32>());
        });
        RegionTables {
            n,
            low,
            width: (high - low + 1) as usize,
            ranks,
            weights,
        }
    }

    /// `e(P)`.
    pub fn path_count(&self) -> usize {
        self.weights.len()
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Rank of `u` in the extension of path number `i`.
    pub fn rank(&self, i: usize, u: usize) -> u32 {
        self.ranks[i * self.n + u] as u32
    }

    /// Ranks of every element in the extension of path number `i`.
    pub fn ranks_of(&self, i: usize) -> &[u8] {
        &self.ranks[i * self.n..(i + 1) * self.n]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.weights[i]
    }

    fn empty_table(&self, offset: i64, rows: usize) -> DenseTable {
        DenseTable {
            offset,
            low: self.low,
            rows: vec![vec![0; self.width]; rows],
        }
    }

    /// `N_q(k)` for `k = 1..=n`.
    pub fn n_table(&self, x: usize) -> DenseTable {
        let mut t = self.empty_table(1, self.n);
        for i in 0..self.path_count() {
            let k = self.rank(i, x) as usize;
            t.rows[k - 1][(self.weights[i] - self.low) as usize] += 1;
        }
        t
    }

    /// `F_q(k)` for `k = 1-n..=n-1`.
    pub fn f_table(&self, x: usize, y: usize) -> DenseTable {
        let n = self.n as i64;
        let mut t = self.empty_table(1 - n, (2 * n - 1).max(0) as usize);
        for i in 0..self.path_count() {
            let k = self.rank(i, y) as i64 - self.rank(i, x) as i64;
            t.rows[(k + n - 1) as usize][(self.weights[i] - self.low) as usize] += 1;
        }
        t
    }
}

/// Dense `q`-polynomial rows indexed by `k`; row `i` holds `k = offset + i`
/// and coefficient `j` of a row is that of `q^{low + j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseTable {
    offset: i64,
    low: u32,
    rows: Vec<Vec<u64>>,
}

impl DenseTable {
    fn row(&self, k: i64) -> Option<&[u64]> {
        let i = k - self.offset;
        if i < 0 {
            return None;
        }
        self.rows.get(i as usize).map(|r| r.as_slice())
    }

    /// The value at `q = 1`.
    pub fn count(&self, k: i64) -> u64 {
        self.row(k).map_or(0, |r| r.iter().sum())
    }

    pub fn to_qpoly(&self, k: i64) -> QPoly {
        self.row(k)
            .map_or_else(QPoly::zero, |r| QPoly::from_dense(self.low, r))
    }

    /// Range of `k` covered by the rows.
    pub fn k_range(&self) -> std::ops::RangeInclusive<i64> {
        self.offset..=self.offset + self.rows.len() as i64 - 1
    }

    /// Coefficients of `v_k^2 - v_{k-1} v_{k+1}`.
    fn lc_diff(&self, k: i64) -> Vec<i128> {
        let w = self.rows.first().map_or(0, |r| r.len());
        let empty = vec![0u64; w];
        let row = |k: i64| self.row(k).unwrap_or(&empty);
        let (mid, lo, hi) = (row(k), row(k - 1), row(k + 1));
        let mut diff = vec![0i128; 2 * w];
        for i in 0..w {
            if mid[i] != 0 {
                for j in 0..w {
                    diff[i + j] += (mid[i] * mid[j]) as i128;
                }
            }
            if lo[i] != 0 {
                for j in 0..w {
                    diff[i + j] -= (lo[i] * hi[j]) as i128;
                }
            }
        }
        diff
    }

    /// Coefficientwise `v_k^2 >= v_{k-1} v_{k+1}` (rows outside the table
    /// are zero).
    pub fn log_concave_at(&self, k: i64) -> bool {
        self.lc_diff(k).iter().all(|&c| c >= 0)
    }

    /// `v_k^2 = v_{k-1} v_{k+1}` as polynomials.
    pub fn lc_tight_at(&self, k: i64) -> bool {
        self.lc_diff(k).iter().all(|&c| c == 0)
    }

    /// `v_to = q^eps v_from` as polynomials.
    pub fn shifted_eq(&self, from: i64, to: i64, eps: i64) -> bool {
        let w = self.rows.first().map_or(0, |r| r.len()) as i64;
        let get = |k: i64, j: i64| -> u64 {
            if !(0..w).contains(&j) {
                return 0;
            }
            self.row(k).map_or(0, |r| r[j as usize])
        };
        (0..w).all(|j| get(to, j) == get(from, j - eps))
            && (0..w).all(|j| get(from, j) == get(to, j + eps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::{enumerate_regions, poset_of_region};
    use crate::stats::{f_q_dist, n_q_dist, StatValue};

    #[test]
    fn dense_tables_match_distributions() {
        for a in 0..=3 {
            for b in 0..=3 {
                for r in enumerate_regions(a, b) {
                    let t = RegionTables::new(&r);
                    let (p, cp) = poset_of_region(&r);
                    assert_eq!(
                        t.path_count() as u64,
                        p.count_extensions().try_into().unwrap()
                    );
                    for x in 0..p.len() {
                        let nt = t.n_table(x);
                        let nd = n_q_dist(&p, &cp, x).unwrap();
                        for k in nt.k_range() {
                            assert_eq!(nt.to_qpoly(k), nd.get(k));
                            let want = nd.get(k).lc_difference(&nd.get(k - 1), &nd.get(k + 1));
                            assert_eq!(nt.log_concave_at(k), want.is_nonnegative());
                        }
                        for y in 0..p.len() {
                            if x == y {
                                continue;
                            }
                            let ft = t.f_table(x, y);
                            let fd = f_q_dist(&p, &cp, x, y).unwrap();
                            for k in ft.k_range() {
                                assert_eq!(ft.to_qpoly(k), fd.get(k));
                                let want = fd.get(k).lc_difference(&fd.get(k - 1), &fd.get(k + 1));
                                assert_eq!(
                                    ft.log_concave_at(k),
                                    want.is_nonnegative(),
                                    "{r:?} {x} {y} {k}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}
