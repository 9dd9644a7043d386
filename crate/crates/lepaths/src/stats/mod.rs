//! The position statistic `N(k)` (extensions with `L(x) = k`) and the gap
//! statistic `F(k)` (extensions with `L(y) - L(x) = k`), in plain, `q`- and
//! multivariate form, and the log-concavity checks built on them.
//!
//! Plain distributions come from enumerating linear extensions.  The
//! `q`-distributions of width-two posets come from the lattice-path dynamic
//! program and have enumerated twins (`*_enumerated`) used as oracles.

mod tables;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::PathCounter;
use crate::poly::{MultiPoly, MultiZPoly, QPoly, ZPoly};
use crate::poset::{Chain, ChainPartition, Poset};
use crate::region::{region_of, GridPoint, Region, Step};

pub use tables::{DenseTable, RegionTables};

/// Which statistic a distribution tabulates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatKind {
    /// `N(k)`: extensions with `L(x) = k`.
    Position,
    /// `F(k)`: extensions with `L(y) - L(x) = k`.
    Gap,
}

/// Values a distribution can hold: counts, `q`-polynomials or multivariate
/// polynomials.
pub trait StatValue: Clone + PartialEq + fmt::Debug {
    /// Type of `v_k^2 - v_{k-1} v_{k+1}`.
    type Diff: Clone + PartialEq + fmt::Debug + fmt::Display;
    fn is_zero(&self) -> bool;
    fn accumulate(&mut self, other: &Self);
    /// `self^2 - lo * hi`.
    fn lc_difference(&self, lo: &Self, hi: &Self) -> Self::Diff;
    /// Nonnegativity (coefficientwise for polynomials).
    fn diff_nonnegative(d: &Self::Diff) -> bool;
}

impl StatValue for BigUint {
    type Diff = BigInt;
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn lc_difference(&self, lo: &Self, hi: &Self) -> BigInt {
        BigInt::from(self * self) - BigInt::from(lo * hi)
    }
    fn diff_nonnegative(d: &BigInt) -> bool {
        d.sign() != num_bigint::Sign::Minus
    }
}

impl StatValue for QPoly {
    type Diff = ZPoly;
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn lc_difference(&self, lo: &Self, hi: &Self) -> ZPoly {
        &(self * self) - &(lo * hi)
    }
    fn diff_nonnegative(d: &ZPoly) -> bool {
        d.is_nonnegative()
    }
}

impl StatValue for MultiPoly {
    type Diff = MultiZPoly;
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn accumulate(&mut self, other: &Self) {
        *self = self
            .checked_add(other)
            .expect("distribution values share one arity");
    }
    fn lc_difference(&self, lo: &Self, hi: &Self) -> MultiZPoly {
        let sq = self.checked_mul(self).expect("same arity");
        sq.checked_sub(&lo.checked_mul(hi).expect("same arity"))
            .expect("same arity")
    }
    fn diff_nonnegative(d: &MultiZPoly) -> bool {
        d.is_nonnegative()
    }
}

/// A statistic tabulated over `k`; absent keys are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<V> {
    pub kind: StatKind,
    pub x: usize,
    pub y: Option<usize>,
    zero: V,
    table: BTreeMap<i64, V>,
}

impl<V: StatValue> Distribution<V> {
    pub fn new(kind: StatKind, x: usize, y: Option<usize>, zero: V) -> Self {
        Distribution {
            kind,
            x,
            y,
            zero,
            table: BTreeMap::new(),
        }
    }

    /// Adds `v` to the value at `k`.
    pub fn add(&mut self, k: i64, v: &V) {
        if v.is_zero() {
            return;
        }
        match self.table.get_mut(&k) {
            Some(cur) => cur.accumulate(v),
            None => {
                self.table.insert(k, v.clone());
            }
        }
    }

    /// The value at `k` (zero outside the support).
    pub fn get(&self, k: i64) -> V {
        self.table
            .get(&k)
            .cloned()
            .unwrap_or_else(|| self.zero.clone())
    }

    /// Nonzero entries by increasing `k`.
    pub fn table(&self) -> &BTreeMap<i64, V> {
        &self.table
    }

    /// Smallest and largest `k` with a nonzero value.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.table.keys().next()?, *self.table.keys().next_back()?))
    }

    /// Whether the support has no internal zeros.
    pub fn support_is_interval(&self) -> bool {
        self.support()
            .is_none_or(|(lo, hi)| (hi - lo + 1) as usize == self.table.len())
    }

    pub fn total(&self) -> V {
        let mut t = self.zero.clone();
        for v in self.table.values() {
            t.accumulate(v);
        }
        t
    }

    /// `v_k^2 - v_{k-1} v_{k+1}` and its sign for each `k` in `ks`.
    pub fn log_concavity(&self, ks: impl IntoIterator<Item = i64>) -> LcReport<V::Diff> {
        let verdicts = ks
            .into_iter()
            .map(|k| {
                let difference = self
                    .get(k)
                    .lc_difference(&self.get(k - 1), &self.get(k + 1));
                LcVerdict {
                    k,
                    holds: V::diff_nonnegative(&difference),
                    difference,
                }
            })
            .collect();
        LcReport { verdicts }
    }
}

/// One log-concavity comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct LcVerdict<D> {
    pub k: i64,
    pub holds: bool,
    pub difference: D,
}

/// Log-concavity comparisons for a range of `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LcReport<D> {
    pub verdicts: Vec<LcVerdict<D>>,
}

impl<D> LcReport<D> {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LcVerdict<D>> {
        self.verdicts.iter().filter(|v| !v.holds)
    }
}

fn check_element(p: &Poset, u: usize) -> Result<()> {
    if u >= p.len() {
        Err(Error::ElementOutOfRange { id: u, n: p.len() })
    } else {
        Ok(())
    }
}

fn check_pair(p: &Poset, x: usize, y: usize) -> Result<()> {
    check_element(p, x)?;
    check_element(p, y)?;
    if x == y {
        return Err(Error::NotDistinct(x));
    }
    Ok(())
}

/// `N(k)` by enumeration of linear extensions.
pub fn n_dist(p: &Poset, x: usize) -> Result<Distribution<BigUint>> {
    check_element(p, x)?;
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    p.for_each_extension(|_, ranks| *counts.entry(ranks[x] as i64).or_default() += 1);
    let mut d = Distribution::new(StatKind::Position, x, None, BigUint::zero());
    for (k, c) in counts {
        d.add(k, &BigUint::from(c));
    }
    Ok(d)
}

/// `F(k)` by enumeration of linear extensions.
pub fn f_dist(p: &Poset, x: usize, y: usize) -> Result<Distribution<BigUint>> {
    check_pair(p, x, y)?;
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    p.for_each_extension(|_, ranks| {
        *counts.entry(ranks[y] as i64 - ranks[x] as i64).or_default() += 1
    });
    let mut d = Distribution::new(StatKind::Gap, x, Some(y), BigUint::zero());
    for (k, c) in counts {
        d.add(k, &BigUint::from(c));
    }
    Ok(d)
}

/// `wgt(L) = sum_i L(alpha_i)`.
pub fn extension_weight(cp: &ChainPartition, ranks: &[u32]) -> u32 {
    cp.c1().iter().map(|&u| ranks[u]).sum()
}

/// Exponent vector of `q^L = prod_i q_i^{L(alpha_i) - L(alpha_{i-1})}`.
pub fn multivariate_exponents(cp: &ChainPartition, ranks: &[u32]) -> Vec<u32> {
    let mut prev = 0;
    cp.c1()
        .iter()
        .map(|&u| {
            let e = ranks[u] - prev;
            prev = ranks[u];
            e
        })
        .collect()
}

/// `N_q(k)` by enumeration of linear extensions (oracle for [`n_q_dist`]).
pub fn n_q_dist_enumerated(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
) -> Result<Distribution<QPoly>> {
    check_element(p, x)?;
    let mut d = Distribution::new(StatKind::Position, x, None, QPoly::zero());
    p.for_each_extension(|_, ranks| {
        d.add(
            ranks[x] as i64,
            &QPoly::monomial(extension_weight(cp, ranks), 1u32),
        )
    });
    Ok(d)
}

/// `F_q(k)` by enumeration of linear extensions (oracle for [`f_q_dist`]).
pub fn f_q_dist_enumerated(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
) -> Result<Distribution<QPoly>> {
    check_pair(p, x, y)?;
    let mut d = Distribution::new(StatKind::Gap, x, Some(y), QPoly::zero());
    p.for_each_extension(|_, ranks| {
        let k = ranks[y] as i64 - ranks[x] as i64;
        d.add(k, &QPoly::monomial(extension_weight(cp, ranks), 1u32));
    });
    Ok(d)
}

/// The point a path leaves, and the step it takes, when element `(chain, pos)`
/// receives rank `t`.
fn step_at(chain: Chain, pos: usize, t: i64) -> (GridPoint, Step) {
    let along = pos as i64 - 1;
    let across = t - pos as i64;
    match chain {
        Chain::First => (GridPoint::new(along as i32, across as i32), Step::East),
        Chain::Second => (GridPoint::new(across as i32, along as i32), Step::North),
    }
}

/// The region and path counter of a width-two poset, with the partition used
/// to locate elements.
struct PathModel<'a> {
    cp: &'a ChainPartition,
    counter: PathCounter<'a>,
    n: i64,
}

impl<'a> PathModel<'a> {
    fn new(cp: &'a ChainPartition, region: &'a Region) -> Self {
        PathModel {
            cp,
            counter: PathCounter::new(region),
            n: (cp.a() + cp.b()) as i64,
        }
    }

    fn corner(&self) -> GridPoint {
        self.counter.region().corner()
    }

    /// q-count of paths taking `u`'s step at time `t`.
    fn position(&self, u: usize, t: i64) -> QPoly {
        let (chain, pos) = self.cp.position(u);
        let (pt, step) = step_at(chain, pos, t);
        let head = self.counter.count(GridPoint::ORIGIN, pt);
        if head.is_zero() {
            return head;
        }
        let tail = self.counter.count(pt + step.vector(), self.corner());
        (&head * &tail).shift(step.weight_from(pt))
    }

    /// q-count of paths taking `u`'s step at time `t` and `v`'s at `t + d`, `d >= 1`.
    fn two_steps(&self, u: usize, t: i64, v: usize, d: i64) -> QPoly {
        let (cu, pu) = self.cp.position(u);
        let (cv, pv) = self.cp.position(v);
        let (p1, s1) = step_at(cu, pu, t);
        let (p2, s2) = step_at(cv, pv, t + d);
        let head = self.counter.count(GridPoint::ORIGIN, p1);
        if head.is_zero() {
            return head;
        }
        let mid = self.counter.count(p1 + s1.vector(), p2);
        if mid.is_zero() {
            return mid;
        }
        let tail = self.counter.count(p2 + s2.vector(), self.corner());
        (&(&head * &mid) * &tail).shift(s1.weight_from(p1) + s2.weight_from(p2))
    }

    /// `F_q(w; k)`: `L(x) = w`, `L(y) = w + k`.
    fn level(&self, x: usize, y: usize, w: i64, k: i64) -> QPoly {
        match k {
            0 => QPoly::zero(),
            k if k > 0 => self.two_steps(x, w, y, k),
            k => self.two_steps(y, w + k, x, -k),
        }
    }
}

fn width_two_region(p: &Poset, cp: &ChainPartition) -> Result<Region> {
    if cp.a() + cp.b() != p.len() {
        return Err(Error::InvalidChainPartition(
            "the partition does not match the poset".into(),
        ));
    }
    Ok(region_of(p, cp))
}

/// `N_q(k) = sum_{L(x) = k} q^{wgt(L)}` by the lattice-path dynamic program.
pub fn n_q_dist(p: &Poset, cp: &ChainPartition, x: usize) -> Result<Distribution<QPoly>> {
    check_element(p, x)?;
    let region = width_two_region(p, cp)?;
    let model = PathModel::new(cp, &region);
    let mut d = Distribution::new(StatKind::Position, x, None, QPoly::zero());
    for k in 1..=model.n {
        d.add(k, &model.position(x, k));
    }
    Ok(d)
}

/// `F_q(k) = sum_{L(y) - L(x) = k} q^{wgt(L)}` by the lattice-path dynamic program.
pub fn f_q_dist(p: &Poset, cp: &ChainPartition, x: usize, y: usize) -> Result<Distribution<QPoly>> {
    check_pair(p, x, y)?;
    let region = width_two_region(p, cp)?;
    let model = PathModel::new(cp, &region);
    let mut d = Distribution::new(StatKind::Gap, x, Some(y), QPoly::zero());
    for k in 1 - model.n..model.n {
        let mut total = QPoly::zero();
        for w in 1..=model.n {
            total += &model.level(x, y, w, k);
        }
        d.add(k, &total);
    }
    Ok(d)
}

/// `F_q(w; k)`: the part of `F_q(k)` with `L(x) = w`.
pub fn f_q_level(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
    w: i64,
    k: i64,
) -> Result<QPoly> {
    check_pair(p, x, y)?;
    let region = width_two_region(p, cp)?;
    Ok(PathModel::new(cp, &region).level(x, y, w, k))
}

/// Largest first chain accepted by the multivariate statistics.
pub const MAX_MULTI_ARITY: usize = 16;

fn check_arity(cp: &ChainPartition) -> Result<()> {
    if cp.a() > MAX_MULTI_ARITY {
        return Err(Error::TooLarge {
            n: cp.a(),
            max: MAX_MULTI_ARITY,
        });
    }
    Ok(())
}

/// `N_q(k)` in the variables `q_1, ..., q_a`, by enumeration.
pub fn n_mq_dist(p: &Poset, cp: &ChainPartition, x: usize) -> Result<Distribution<MultiPoly>> {
    check_element(p, x)?;
    check_arity(cp)?;
    let mut d = Distribution::new(StatKind::Position, x, None, MultiPoly::zero(cp.a()));
    p.for_each_extension(|_, ranks| {
        d.add(
            ranks[x] as i64,
            &MultiPoly::monomial(multivariate_exponents(cp, ranks), BigUint::one()),
        )
    });
    Ok(d)
}

/// `F_q(k)` in the variables `q_1, ..., q_a`, by enumeration.
pub fn f_mq_dist(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
) -> Result<Distribution<MultiPoly>> {
    check_pair(p, x, y)?;
    check_arity(cp)?;
    let mut d = Distribution::new(StatKind::Gap, x, Some(y), MultiPoly::zero(cp.a()));
    p.for_each_extension(|_, ranks| {
        let k = ranks[y] as i64 - ranks[x] as i64;
        d.add(
            k,
            &MultiPoly::monomial(multivariate_exponents(cp, ranks), BigUint::one()),
        );
    });
    Ok(d)
}

/// Substitution `q_i := q^{a - i + 1}`, under which `q^L` becomes `q^{wgt(L)}`.
pub fn weight_specialization(a: usize) -> Vec<u32> {
    (1..=a).map(|i| (a - i + 1) as u32).collect()
}

/// Specializes every value of a multivariate distribution.
pub fn specialize_dist(
    d: &Distribution<MultiPoly>,
    weights: &[u32],
) -> Result<Distribution<QPoly>> {
    let mut out = Distribution::new(d.kind, d.x, d.y, QPoly::zero());
    for (&k, v) in d.table() {
        out.add(k, &v.specialize(weights)?);
    }
    Ok(out)
}

/// Whether `f >= g` coefficientwise, i.e. `f - g` has nonnegative coefficients.
pub fn coeffwise_geq(f: &QPoly, g: &QPoly) -> bool {
    f.dominates(g)
}

/// Multivariate version of [`coeffwise_geq`].
pub fn coeffwise_geq_multi(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    Ok(f.checked_sub(g)?.is_nonnegative())
}

fn ks_range(n: usize) -> std::ops::RangeInclusive<i64> {
    2..=n as i64
}

/// `N(k)^2 >= N(k-1) N(k+1)` for `k = 2..=n`.
pub fn check_stanley(p: &Poset, x: usize) -> Result<LcReport<BigInt>> {
    Ok(n_dist(p, x)?.log_concavity(ks_range(p.len())))
}

/// `F(k)^2 >= F(k-1) F(k+1)` for `k = 2..=n`.
pub fn check_ks(p: &Poset, x: usize, y: usize) -> Result<LcReport<BigInt>> {
    Ok(f_dist(p, x, y)?.log_concavity(ks_range(p.len())))
}

/// Coefficientwise `N_q(k)^2 >= N_q(k-1) N_q(k+1)` for `k = 2..=n`.
pub fn check_q_stanley(p: &Poset, cp: &ChainPartition, x: usize) -> Result<LcReport<ZPoly>> {
    Ok(n_q_dist(p, cp, x)?.log_concavity(ks_range(p.len())))
}

/// Coefficientwise `F_q(k)^2 >= F_q(k-1) F_q(k+1)` for `k = 2..=n`; refuses
/// pairs from different chains, where the inequality fails.
pub fn check_q_ks(p: &Poset, cp: &ChainPartition, x: usize, y: usize) -> Result<LcReport<ZPoly>> {
    check_pair(p, x, y)?;
    if !cp.same_chain(x, y) {
        return Err(Error::NotSameChain { x, y });
    }
    Ok(f_q_dist(p, cp, x, y)?.log_concavity(ks_range(p.len())))
}

/// Multivariate Stanley check; `x` must lie in the first chain.
pub fn check_mq_stanley(p: &Poset, cp: &ChainPartition, x: usize) -> Result<LcReport<MultiZPoly>> {
    check_element(p, x)?;
    if cp.chain_of(x) != Chain::First {
        return Err(Error::NotFirstChain(x));
    }
    Ok(n_mq_dist(p, cp, x)?.log_concavity(ks_range(p.len())))
}

/// Multivariate Kahn–Saks check; `x` and `y` must both lie in the first chain.
pub fn check_mq_ks(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
) -> Result<LcReport<MultiZPoly>> {
    check_pair(p, x, y)?;
    if !cp.same_chain(x, y) {
        return Err(Error::NotSameChain { x, y });
    }
    if cp.chain_of(x) != Chain::First {
        return Err(Error::NotFirstChain(x));
    }
    Ok(f_mq_dist(p, cp, x, y)?.log_concavity(ks_range(p.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{unlabeled_posets, width2_partition};
    use crate::region::{enumerate_regions, poset_of_region};

    fn c3_plus_c3() -> (Poset, ChainPartition) {
        let p = Poset::from_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let cp = ChainPartition::new(&p, vec![0, 1, 2], vec![3, 4, 5]).unwrap();
        (p, cp)
    }

    #[test]
    fn cross_chain_counterexample() {
        let (p, cp) = c3_plus_c3();
        let (x, y) = (cp.alpha(1), cp.beta(3));
        let d = f_q_dist(&p, &cp, x, y).unwrap();
        assert_eq!(d.get(1), QPoly::monomial(14, 1u32));
        assert_eq!(d.get(2), QPoly::monomial(13, 2u32));
        assert_eq!(d.get(3), QPoly::from_terms([(12, 3u32), (11, 1)]));
        let lc = d.log_concavity([2]);
        assert_eq!(
            lc.verdicts[0].difference,
            ZPoly::from_terms([(26, 1i64), (25, -1)])
        );
        assert!(!lc.all_hold());
        let (f2sq, f1f3) = (&d.get(2) * &d.get(2), &d.get(1) * &d.get(3));
        assert!(!coeffwise_geq(&f2sq, &f1f3) && !coeffwise_geq(&f1f3, &f2sq));
        let plain = f_dist(&p, x, y).unwrap();
        let counts: Vec<u32> = (1..=3).map(|k| plain.get(k).try_into().unwrap()).collect();
        assert_eq!(counts, [1, 2, 4]);
        assert!(matches!(
            check_q_ks(&p, &cp, x, y),
            Err(Error::NotSameChain { .. })
        ));
    }

    #[test]
    fn chain_is_point_mass() {
        let p = Poset::chain(5);
        let d = n_dist(&p, 2).unwrap();
        assert_eq!(d.table().len(), 1);
        assert_eq!(d.get(3), BigUint::one());
    }

    #[test]
    fn pentagon_position_counts() {
        // alpha1 < beta1 < beta2 < alpha3, alpha1 < alpha2 < alpha3.
        let p = Poset::from_relations(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]).unwrap();
        let d = n_dist(&p, 1).unwrap();
        let counts: Vec<BigUint> = (2..=4).map(|k| d.get(k)).collect();
        assert_eq!(counts, vec![BigUint::one(); 3]);
        assert_eq!(d.total(), p.count_extensions());
    }

    #[test]
    fn reversed_gap_has_negative_support() {
        let (p, cp) = c3_plus_c3();
        let d = f_dist(&p, cp.alpha(3), cp.alpha(1)).unwrap();
        assert!(d.support().unwrap().1 < 0);
        let dq = f_q_dist(&p, &cp, cp.alpha(3), cp.alpha(1)).unwrap();
        assert_eq!(
            dq,
            f_q_dist_enumerated(&p, &cp, cp.alpha(3), cp.alpha(1)).unwrap()
        );
    }

    #[test]
    fn dp_matches_enumeration_on_small_regions() {
        for a in 0..=3 {
            for b in 0..=3 {
                for r in enumerate_regions(a, b) {
                    let (p, cp) = poset_of_region(&r);
                    for x in 0..p.len() {
                        assert_eq!(
                            n_q_dist(&p, &cp, x).unwrap(),
                            n_q_dist_enumerated(&p, &cp, x).unwrap()
                        );
                        for y in 0..p.len() {
                            if x != y {
                                let dp = f_q_dist(&p, &cp, x, y).unwrap();
                                assert_eq!(dp, f_q_dist_enumerated(&p, &cp, x, y).unwrap());
                                for w in 0..=p.len() as i64 + 1 {
                                    for k in 1..p.len() as i64 {
                                        let lvl = f_q_level(&p, &cp, x, y, w, k).unwrap();
                                        let mut brute = QPoly::zero();
                                        p.for_each_extension(|_, ranks| {
                                            if ranks[x] as i64 == w && ranks[y] as i64 == w + k {
                                                brute.add_term(extension_weight(&cp, ranks), 1);
                                            }
                                        });
                                        assert_eq!(lvl, brute);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn specializations() {
        let (p, cp) = c3_plus_c3();
        let x = cp.alpha(1);
        let y = cp.alpha(3);
        let mq = f_mq_dist(&p, &cp, x, y).unwrap();
        let q = f_q_dist(&p, &cp, x, y).unwrap();
        assert_eq!(specialize_dist(&mq, &weight_specialization(3)).unwrap(), q);
        let at_one = f_dist(&p, x, y).unwrap();
        for (&k, v) in mq.table() {
            assert_eq!(v.eval_ones(), at_one.get(k));
            assert_eq!(q.get(k).eval_one(), at_one.get(k));
        }
        // All variables set to the same q give q^{L(alpha_a)}, not q^{wgt(L)}.
        let naive = specialize_dist(&mq, &[1, 1, 1]).unwrap();
        assert_ne!(naive, q);
    }

    #[test]
    fn plain_inequalities_on_all_small_posets() {
        for n in 1..=6 {
            for p in unlabeled_posets(n) {
                let e = p.count_extensions();
                for x in 0..n {
                    let d = n_dist(&p, x).unwrap();
                    assert_eq!(d.total(), e);
                    assert!(d.support_is_interval());
                    assert!(d.log_concavity(ks_range(n)).all_hold());
                    for y in 0..n {
                        if x != y {
                            let f = f_dist(&p, x, y).unwrap();
                            assert!(check_ks(&p, x, y).unwrap().all_hold());
                            assert_eq!(f.total(), e);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q_inequalities_on_width_two_posets() {
        for n in 1..=6 {
            for p in unlabeled_posets(n) {
                let Ok(cp) = width2_partition(&p) else {
                    continue;
                };
                for x in 0..n {
                    assert!(check_q_stanley(&p, &cp, x).unwrap().all_hold());
                    if cp.chain_of(x) == Chain::First {
                        assert!(check_mq_stanley(&p, &cp, x).unwrap().all_hold());
                    }
                    for y in 0..n {
                        if x != y && cp.same_chain(x, y) {
                            assert!(check_q_ks(&p, &cp, x, y).unwrap().all_hold());
                            if cp.chain_of(x) == Chain::First {
                                assert!(check_mq_ks(&p, &cp, x, y).unwrap().all_hold());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn argument_errors() {
        let (p, cp) = c3_plus_c3();
        assert!(matches!(f_dist(&p, 1, 1), Err(Error::NotDistinct(1))));
        assert!(matches!(
            n_dist(&p, 9),
            Err(Error::ElementOutOfRange { .. })
        ));
        assert!(matches!(
            check_mq_stanley(&p, &cp, cp.beta(1)),
            Err(Error::NotFirstChain(_))
        ));
        let m1 = MultiPoly::monomial(vec![1, 0], 1u32);
        let m2 = MultiPoly::monomial(vec![1], 1u32);
        assert!(matches!(
            coeffwise_geq_multi(&m1, &m2),
            Err(Error::ArityMismatch { .. })
        ));
        assert!(coeffwise_geq_multi(&m1, &m1).unwrap());
    }
}
