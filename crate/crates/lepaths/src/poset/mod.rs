//! Finite posets, linear extensions and ideal-size statistics.
//!
//! Elements are dense ids `0..n`.  The strict order is stored transitively
//! closed as one bitset row per element, so comparisons are O(1) and the
//! ideal sizes `f`, `g`, `h` are popcounts.  Ranks of a linear extension are
//! `1..=n`, matching the usual convention `L : X -> {1, ..., n}`.

mod catalog;
mod chains;
mod extensions;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

pub use catalog::{canonical_code, unlabeled_posets};
pub use chains::{width2_partition, Chain, ChainPartition};
pub use extensions::Extensions;

/// Largest supported ground set (one machine word per bitset row).
pub const MAX_ELEMENTS: usize = 64;

/// A strict partial order on `0..n`, stored transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    /// `below[v]` has bit `u` set iff `u < v`.
    below: Vec<u64>,
    /// `above[u]` has bit `v` set iff `u < v`.
    above: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Poset(n={}, covers={:?})",
            self.n,
            self.cover_relations()
        )
    }
}

impl Poset {
    /// Builds the transitive closure of `pairs`, where `(u, v)` means `u < v`.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let mut above = vec![0u64; n];
        for &(u, v) in pairs {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::ElementOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfRelation(u));
            }
            above[u] |= 1 << v;
        }
        // Warshall closure on bitset rows.
        for k in 0..n {
            for i in 0..n {
                if above[i] >> k & 1 == 1 {
                    above[i] |= above[k];
                }
            }
        }
        if (0..n).any(|i| above[i] >> i & 1 == 1) {
            return Err(Error::NotPartialOrder);
        }
        Ok(Poset::from_above(above))
    }

    fn from_above(above: Vec<u64>) -> Poset {
        let n = above.len();
        let mut below = vec![0u64; n];
        for (u, &row) in above.iter().enumerate() {
            for v in bits(row) {
                below[v] |= 1 << u;
            }
        }
        Poset { n, below, above }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Poset {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relations(n, &pairs).expect("a chain is a partial order")
    }

    /// The `n`-element antichain.
    pub fn antichain(n: usize) -> Poset {
        Poset::from_relations(n, &[]).expect("an antichain is a partial order")
    }

    /// Disjoint sum: `other`'s elements are renumbered to `n..n+m`.
    pub fn disjoint_sum(&self, other: &Poset) -> Result<Poset> {
        let mut pairs = self.relations();
        pairs.extend(
            other
                .relations()
                .into_iter()
                .map(|(u, v)| (u + self.n, v + self.n)),
        );
        Poset::from_relations(self.n + other.n, &pairs)
    }

    /// Adjoins a new maximum element with id `n`.
    pub fn with_top(&self) -> Result<Poset> {
        let mut pairs = self.relations();
        pairs.extend((0..self.n).map(|u| (u, self.n)));
        Poset::from_relations(self.n + 1, &pairs)
    }

    /// Adjoins a new minimum element with id `n`.
    pub fn with_bottom(&self) -> Result<Poset> {
        let mut pairs = self.relations();
        pairs.extend((0..self.n).map(|u| (self.n, u)));
        Poset::from_relations(self.n + 1, &pairs)
    }

    /// Relabels element `u` as `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        let pairs: Vec<_> = self
            .relations()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Poset::from_relations(self.n, &pairs)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `u < v`.
    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.above[u] >> v & 1 == 1
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        u == v || self.lt(u, v) || self.lt(v, u)
    }

    /// `u || v` (distinct and incomparable).
    pub fn incomparable(&self, u: usize, v: usize) -> bool {
        !self.comparable(u, v)
    }

    /// Bitset of elements strictly below `u`.
    pub fn below_mask(&self, u: usize) -> u64 {
        self.below[u]
    }

    /// Bitset of elements strictly above `u`.
    pub fn above_mask(&self, u: usize) -> u64 {
        self.above[u]
    }

    /// Bitset of all elements.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// `f(u)`: number of elements strictly below `u`.
    pub fn down_count(&self, u: usize) -> usize {
        self.below[u].count_ones() as usize
    }

    /// `g(u)`: number of elements strictly above `u`.
    pub fn up_count(&self, u: usize) -> usize {
        self.above[u].count_ones() as usize
    }

    /// `h(x, y)`: number of elements strictly between `x` and `y`.
    pub fn between_count(&self, x: usize, y: usize) -> usize {
        (self.above[x] & self.below[y]).count_ones() as usize
    }

    /// The poset with the order reversed.
    pub fn dual(&self) -> Poset {
        Poset {
            n: self.n,
            below: self.above.clone(),
            above: self.below.clone(),
        }
    }

    /// All pairs `(u, v)` with `u < v`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| bits(self.above[u]).map(move |v| (u, v)))
            .collect()
    }

    /// Cover relations `u <. v`, sorted.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(u, v)| self.above[u] & self.below[v] == 0)
            .collect()
    }

    /// Checks that `ranks` is a linear extension (`ranks[u]` is the rank of `u`).
    pub fn is_linear_extension(&self, ranks: &[u32]) -> bool {
        if ranks.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &r in ranks {
            if r == 0 || r as usize > self.n || std::mem::replace(&mut seen[r as usize - 1], true) {
                return false;
            }
        }
        self.relations().iter().all(|&(u, v)| ranks[u] < ranks[v])
    }

    /// Streams every linear extension exactly once, in lexicographic order of
    /// the element sequences (minimal elements tried in ascending id order).
    pub fn extensions(&self) -> Extensions<'_> {
        Extensions::new(self)
    }

    /// Calls `f(order, ranks)` for every linear extension, where `order[t]`
    /// is the element at rank `t + 1` and `ranks[u]` the rank of `u`.
    pub fn for_each_extension(&self, mut f: impl FnMut(&[usize], &[u32])) {
        let mut it = self.extensions();
        while it.advance() {
            f(it.order(), it.ranks());
        }
    }

    /// Number of linear extensions by dynamic programming over order ideals.
    /// Independent of the backtracking enumerator.
    pub fn count_extensions(&self) -> BigUint {
        let mut layer: HashMap<u64, BigUint> = HashMap::new();
        layer.insert(0, BigUint::one());
        for _ in 0..self.n {
            let mut next: HashMap<u64, BigUint> = HashMap::new();
            for (ideal, count) in layer {
                for u in 0..self.n {
                    if ideal >> u & 1 == 0 && self.below[u] & !ideal == 0 {
                        *next.entry(ideal | 1 << u).or_insert_with(BigUint::zero) += &count;
                    }
                }
            }
            layer = next;
        }
        layer.remove(&self.full_mask()).unwrap_or_default()
    }

    /// A random poset: a uniformly random linear order whose pairs are kept
    /// independently with probability `p`, then transitively closed.  Not
    /// uniform over isomorphism classes.
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Poset> {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    pairs.push((order[i], order[j]));
                }
            }
        }
        Poset::from_relations(n, &pairs)
    }
}

/// Iterates the set bits of a word in ascending order.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

/// A linear extension, stored as the rank of each element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearExtension {
    ranks: Vec<u32>,
}

impl LinearExtension {
    /// Validates `ranks` against `p`.
    pub fn new(p: &Poset, ranks: Vec<u32>) -> Result<LinearExtension> {
        if p.is_linear_extension(&ranks) {
            Ok(LinearExtension { ranks })
        } else {
            Err(Error::InvalidExtension(format!(
                "{ranks:?} is not a linear extension"
            )))
        }
    }

    /// Builds the extension listing `order[0]` first.
    pub fn from_order(p: &Poset, order: &[usize]) -> Result<LinearExtension> {
        if order.len() != p.len() || order.iter().any(|&u| u >= p.len()) {
            return Err(Error::InvalidExtension(format!(
                "{order:?} is not a permutation"
            )));
        }
        let mut ranks = vec![0u32; p.len()];
        for (t, &u) in order.iter().enumerate() {
            ranks[u] = t as u32 + 1;
        }
        LinearExtension::new(p, ranks)
    }

    pub(crate) fn from_ranks_unchecked(ranks: Vec<u32>) -> LinearExtension {
        LinearExtension { ranks }
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// `L(u)`.
    pub fn rank(&self, u: usize) -> u32 {
        self.ranks[u]
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Elements listed by increasing rank.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0usize; self.ranks.len()];
        for (u, &r) in self.ranks.iter().enumerate() {
            order[r as usize - 1] = u;
        }
        order
    }

    /// The element of rank `r`, if `1 <= r <= n`.
    pub fn at(&self, r: u32) -> Option<usize> {
        self.ranks.iter().position(|&x| x == r)
    }

    /// The extension `L*(u) = n + 1 - L(u)` of the dual poset.
    pub fn reversed(&self) -> LinearExtension {
        let n = self.ranks.len() as u32;
        LinearExtension {
            ranks: self.ranks.iter().map(|&r| n + 1 - r).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c3_plus_c3() -> Poset {
        Poset::from_relations(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn closure_adds_transitive_pairs() {
        let p = Poset::from_relations(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.relations(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(p.cover_relations(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Poset::from_relations(3, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotPartialOrder)
        );
        assert_eq!(
            Poset::from_relations(2, &[(0, 2)]),
            Err(Error::ElementOutOfRange { id: 2, n: 2 })
        );
        assert_eq!(
            Poset::from_relations(2, &[(1, 1)]),
            Err(Error::SelfRelation(1))
        );
        let two = Poset::from_relations(2, &[]).unwrap();
        assert!(two.incomparable(0, 1));
    }

    #[test]
    fn extension_counts() {
        assert_eq!(Poset::chain(3).extensions().count(), 1);
        assert_eq!(c3_plus_c3().extensions().count(), 20);
        assert_eq!(Poset::antichain(3).extensions().count(), 6);
        assert_eq!(Poset::antichain(0).extensions().count(), 1);
        assert_eq!(c3_plus_c3().count_extensions(), BigUint::from(20u32));
    }

    #[test]
    fn extension_stream_is_lexicographic() {
        let exts: Vec<Vec<usize>> = Poset::antichain(3)
            .extensions()
            .map(|l| l.order())
            .collect();
        let mut sorted = exts.clone();
        sorted.sort();
        assert_eq!(exts, sorted);
        assert_eq!(exts[0], vec![0, 1, 2]);
    }

    #[test]
    fn ideal_statistics() {
        let c = Poset::chain(3);
        assert_eq!((c.down_count(1), c.up_count(1)), (1, 1));
        let p = c3_plus_c3();
        assert_eq!(
            (p.down_count(0), p.up_count(5), p.between_count(0, 5)),
            (0, 0, 0)
        );
        assert_eq!(p.between_count(0, 2), 1);
    }

    #[test]
    fn dual_reverses() {
        let c = Poset::chain(3);
        let d = c.dual();
        assert!(d.lt(2, 1) && d.lt(1, 0) && d.lt(2, 0));
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn top_and_bottom() {
        let p = c3_plus_c3().with_top().unwrap();
        assert_eq!(p.up_count(0), 3);
        assert_eq!(p.down_count(6), 6);
        let q = c3_plus_c3().with_bottom().unwrap();
        assert_eq!(q.up_count(6), 6);
    }

    fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
        (0..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, p)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Poset::random(n, p, &mut rng).unwrap()
        })
    }

    proptest! {
        #[test]
        fn enumeration_matches_ideal_dp(p in arb_poset(7)) {
            let mut seen = std::collections::HashSet::new();
            for l in p.extensions() {
                prop_assert!(p.is_linear_extension(l.ranks()));
                prop_assert!(seen.insert(l));
            }
            prop_assert_eq!(BigUint::from(seen.len()), p.count_extensions());
        }

        #[test]
        fn counts_match_set_comprehension(p in arb_poset(7)) {
            let n = p.len();
            for u in 0..n {
                let f = (0..n).filter(|&v| v != u && p.lt(v, u)).count();
                let g = (0..n).filter(|&v| v != u && p.lt(u, v)).count();
                prop_assert_eq!(p.down_count(u), f);
                prop_assert_eq!(p.up_count(u), g);
                prop_assert!(f + g < n);
                prop_assert_eq!(p.dual().down_count(u), g);
                for w in 0..n {
                    let h = (0..n).filter(|&v| p.lt(u, v) && p.lt(v, w)).count();
                    prop_assert_eq!(p.between_count(u, w), h);
                }
            }
            prop_assert_eq!(p.dual().dual(), p.clone());
            if n > 0 {
                prop_assert!((0..n).any(|u| p.down_count(u) == 0));
            }
        }

        #[test]
        fn reversal_maps_to_dual_extensions(p in arb_poset(6)) {
            let d = p.dual();
            for l in p.extensions() {
                prop_assert!(d.is_linear_extension(l.reversed().ranks()));
            }
        }
    }
}
