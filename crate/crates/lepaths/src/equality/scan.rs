//! Exhaustive suites: vanishing windows on general posets, the width-two
//! equality characterisations on regions, and the equality scan on general
//! posets.  Each suite evaluates one instance purely and the results merge
//! associatively, so batches run in parallel with deterministic output.

use rayon::prelude::*;

use crate::poset::{bits, Chain, Poset};
use crate::region::{poset_of_region, Region};
use crate::stats::RegionTables;

use super::fiber::ExtensionTable;
use super::maps::claim_driver;
use super::{either_midway, ks_vanishing, pentagon_property, stanley_vanishing, svh_condition};
use crate::poset::LinearExtension;

/// Positivity predicates against enumeration.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VanishingSuite {
    pub stanley_checked: u64,
    pub ks_checked: u64,
    /// `(x, k)` where the ideal-size criterion disagrees with enumeration.
    pub stanley_mismatches: Vec<(usize, i64)>,
    /// `(x, y, k)` likewise for the gap window.
    pub ks_mismatches: Vec<(usize, usize, i64)>,
}

impl VanishingSuite {
    pub fn merge(mut self, other: VanishingSuite) -> VanishingSuite {
        self.stanley_checked += other.stanley_checked;
        self.ks_checked += other.ks_checked;
        self.stanley_mismatches.extend(other.stanley_mismatches);
        self.ks_mismatches.extend(other.ks_mismatches);
        self
    }
}

/// Checks both vanishing criteria for every `x`, every `x < y` and every
/// `k` against the ranks and gaps realised by some extension.
pub fn vanishing_suite(p: &Poset) -> VanishingSuite {
    let n = p.len();
    let pairs = p.relations();
    // Bit `k` of `seen_rank[x]` / bit `k` of `seen_gap[i]` (gaps are positive).
    let mut seen_rank = vec![0u64; n];
    let mut seen_gap = vec![0u64; pairs.len()];
    p.for_each_extension(|_, ranks| {
        for (x, r) in ranks.iter().enumerate() {
            seen_rank[x] |= 1 << r;
        }
        for (i, &(x, y)) in pairs.iter().enumerate() {
            seen_gap[i] |= 1 << (ranks[y] - ranks[x]);
        }
    });
    let mut out = VanishingSuite::default();
    for (x, &seen) in seen_rank.iter().enumerate() {
        for k in 1..=n as i64 {
            out.stanley_checked += 1;
            if stanley_vanishing(p, x, k) != (seen >> k & 1 == 1) {
                out.stanley_mismatches.push((x, k));
            }
        }
    }
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for k in 1..n as i64 {
            out.ks_checked += 1;
            let want = seen_gap[i] >> k & 1 == 1;
            if ks_vanishing(p, x, y, k).expect("x < y") != want {
                out.ks_mismatches.push((x, y, k));
            }
        }
    }
    out
}

/// Width-two checks on one region, over every element and same-chain pair.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegionSuite {
    /// Same-chain `(x, y, k)` with `k > 1` whose `q`-gap difference was
    /// checked, and those where it had a negative coefficient.
    pub q_ks_checked: u64,
    pub q_ks_failures: Vec<(usize, usize, i64)>,
    /// Position-statistic instances with `N(k) > 0`, `1 <= k <= n - 1`, and
    /// those where the five conditions disagree (bit `i` = condition `a + i`).
    pub stanley_checked: u64,
    pub stanley_discrepancies: Vec<(usize, i64, u8)>,
    /// Instances where the pentagon property and the ideal-size condition
    /// disagree (same range).
    pub pentagon_svh_mismatches: Vec<(usize, i64)>,
    /// Same-chain gap instances with `F(k) > 0`, `2 <= k <= n - 2`, and the
    /// disagreements.
    pub ks_checked: u64,
    pub ks_discrepancies: Vec<(usize, usize, i64, u8)>,
    /// Number of equality instances whose shift was `ε = +1` / `ε = -1`,
    /// split by the chain holding the pair: `[[C1 +, C1 -], [C2 +, C2 -]]`.
    pub ks_epsilons: [[u64; 2]; 2],
    pub ks_equalities: u64,
}

impl RegionSuite {
    pub fn merge(mut self, o: RegionSuite) -> RegionSuite {
        self.q_ks_checked += o.q_ks_checked;
        self.q_ks_failures.extend(o.q_ks_failures);
        self.stanley_checked += o.stanley_checked;
        self.stanley_discrepancies.extend(o.stanley_discrepancies);
        self.pentagon_svh_mismatches
            .extend(o.pentagon_svh_mismatches);
        self.ks_checked += o.ks_checked;
        self.ks_discrepancies.extend(o.ks_discrepancies);
        for c in 0..2 {
            for e in 0..2 {
                self.ks_epsilons[c][e] += o.ks_epsilons[c][e];
            }
        }
        self.ks_equalities += o.ks_equalities;
        self
    }
}

fn pack(conds: [bool; 5]) -> Option<u8> {
    let bits = conds
        .iter()
        .enumerate()
        .fold(0u8, |m, (i, &c)| m | (c as u8) << i);
    (bits != 0 && bits != 0b11111).then_some(bits)
}

/// Runs the `q`-gap inequality and both five-way equality characterisations
/// on the canonical poset of `r`.
pub fn region_equality_suite(r: &Region) -> RegionSuite {
    let (p, cp) = poset_of_region(r);
    let t = RegionTables::new(r);
    let n = p.len();
    let ni = n as i64;
    let mut out = RegionSuite::default();

    // Elements whose two neighbours exist and are incomparable to them, per path.
    let neighbours_ok: Vec<u64> = (0..t.path_count())
        .map(|i| {
            let ranks = t.ranks_of(i);
            let mut order = vec![0usize; n];
            for (u, &rk) in ranks.iter().enumerate() {
                order[rk as usize - 1] = u;
            }
            (1..n.saturating_sub(1)).fold(0u64, |m, pos| {
                let z = order[pos];
                if p.incomparable(order[pos - 1], z) && p.incomparable(order[pos + 1], z) {
                    m | 1 << z
                } else {
                    m
                }
            })
        })
        .collect();

    for x in 0..n {
        let nt = t.n_table(x);
        let eps = if cp.chain_of(x) == Chain::First {
            1
        } else {
            -1
        };
        for k in 1..ni {
            let (lo, mid, hi) = (nt.count(k - 1), nt.count(k), nt.count(k + 1));
            if mid == 0 {
                continue;
            }
            out.stanley_checked += 1;
            let conds = [
                mid as u128 * mid as u128 == lo as u128 * hi as u128,
                lo == mid && mid == hi,
                nt.lc_tight_at(k),
                nt.shifted_eq(k - 1, k, eps) && nt.shifted_eq(k, k + 1, eps),
                pentagon_property(&p, &cp, x, k),
            ];
            if let Some(bits) = pack(conds) {
                out.stanley_discrepancies.push((x, k, bits));
            }
            if conds[4] != svh_condition(&p, x, k) {
                out.pentagon_svh_mismatches.push((x, k));
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            if x == y || !cp.same_chain(x, y) {
                continue;
            }
            let ft = t.f_table(x, y);
            // Witness flags per gap (index k + n).
            let mut flags = vec![(true, true); 2 * n + 1];
            for (i, &ok) in neighbours_ok.iter().enumerate() {
                let k = t.rank(i, y) as i64 - t.rank(i, x) as i64;
                let slot = &mut flags[(k + ni) as usize];
                slot.0 &= ok >> x & 1 == 1;
                slot.1 &= ok >> y & 1 == 1;
            }
            for k in 2..ni {
                out.q_ks_checked += 1;
                if !ft.log_concave_at(k) {
                    out.q_ks_failures.push((x, y, k));
                }
            }
            for k in 2..=ni - 2 {
                let (lo, mid, hi) = (ft.count(k - 1), ft.count(k), ft.count(k + 1));
                if mid == 0 {
                    continue;
                }
                out.ks_checked += 1;
                let eps = [1i64, -1]
                    .into_iter()
                    .find(|&e| ft.shifted_eq(k - 1, k, e) && ft.shifted_eq(k, k + 1, e));
                let (fx, fy) = flags[(k + ni) as usize];
                let conds = [
                    mid as u128 * mid as u128 == lo as u128 * hi as u128,
                    lo == mid && mid == hi,
                    ft.lc_tight_at(k),
                    eps.is_some(),
                    fx || fy,
                ];
                if let Some(bits) = pack(conds) {
                    out.ks_discrepancies.push((x, y, k, bits));
                }
                if let Some(e) = eps {
                    out.ks_equalities += 1;
                    let c = (cp.chain_of(x) == Chain::Second) as usize;
                    out.ks_epsilons[c][(e < 0) as usize] += 1;
                }
            }
        }
    }
    out
}

/// A gap instance where the counts are flat but neither midway property
/// holds; the open direction of the equality characterisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specimen {
    pub poset: Poset,
    pub x: usize,
    pub y: usize,
    pub k: i64,
    /// `F(k - 1), F(k), F(k + 1)`.
    pub counts: [u64; 3],
}

/// Outcome of the equality scan on general posets, over every ordered pair
/// of distinct elements and every `2 <= k <= n - 2` with `F(k) > 0`:
/// `a` = flat counts, `b` = neighbour witness, `c` = midway or dual midway.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjectureScan {
    pub posets: u64,
    pub instances: u64,
    pub count_a: u64,
    pub count_b: u64,
    pub count_c: u64,
    /// `(b) != (c)`: contradicts the theorem, always a failure.
    pub bc_violations: Vec<Specimen>,
    /// `(b)` without `(a)`: contradicts the theorem, always a failure.
    pub ba_violations: Vec<Specimen>,
    /// `(a)` without `(c)`: recorded, never a failure.
    pub specimens: Vec<Specimen>,
    /// Comparable-pair instances where the literal reading of the midway
    /// quantifier (which also ranges over `z = y`) disagrees with `(b)`.
    pub literal_midway_disagreements: u64,
    /// Normalising replays run (one per `(b)`-instance, witness, admissible
    /// `w` and starting extension) and replays that failed.
    pub replays: u64,
    pub replay_failures: Vec<Specimen>,
}

impl ConjectureScan {
    pub fn merge(mut self, o: ConjectureScan) -> ConjectureScan {
        self.posets += o.posets;
        self.instances += o.instances;
        self.count_a += o.count_a;
        self.count_b += o.count_b;
        self.count_c += o.count_c;
        self.bc_violations.extend(o.bc_violations);
        self.ba_violations.extend(o.ba_violations);
        self.specimens.extend(o.specimens);
        self.literal_midway_disagreements += o.literal_midway_disagreements;
        self.replays += o.replays;
        self.replay_failures.extend(o.replay_failures);
        self
    }

    /// No theorem-backed assertion failed.
    pub fn theorems_hold(&self) -> bool {
        self.bc_violations.is_empty()
            && self.ba_violations.is_empty()
            && self.replay_failures.is_empty()
    }

    /// `(b) != (c)` instances on comparable pairs.
    pub fn comparable_bc_violations(&self) -> impl Iterator<Item = &Specimen> {
        self.bc_violations
            .iter()
            .filter(|s| s.poset.comparable(s.x, s.y))
    }
}

/// The literal midway reading with `z = y` admitted in the first clause.
fn literal_midway(p: &Poset, x: usize, y: usize, k: i64) -> bool {
    let n = p.len() as i64;
    let gy = p.up_count(y) as i64;
    bits(p.above_mask(x))
        .filter(|&z| !p.lt(y, z))
        .all(|z| p.down_count(z) as i64 + gy > n - k)
        && bits(p.below_mask(x)).all(|z| p.between_count(z, y) as i64 > k)
        && p.down_count(y) as i64 > k
}

/// Replays the normalising construction for witness `x` from every
/// extension of the fiber and every admissible `w`; returns (runs, ok).
fn replay_claims(
    p: &Poset,
    table: &ExtensionTable,
    x: usize,
    y: usize,
    k: i64,
    reverse: bool,
) -> (u64, bool) {
    let n = p.len() as u32;
    let mut runs = 0;
    let ws: Vec<usize> = bits(p.above_mask(x))
        .filter(|&w| w != y && !p.lt(y, w))
        .collect();
    for i in 0..table.len() {
        let ranks: Vec<u32> = table
            .ranks_of(i)
            .into_iter()
            .map(|r| if reverse { n + 1 - r } else { r })
            .collect();
        if ranks[y] as i64 - ranks[x] as i64 != k {
            continue;
        }
        let start = LinearExtension::new(p, ranks).expect("enumerated extension");
        for &w in &ws {
            runs += 1;
            match claim_driver(p, x, y, w, &start) {
                Ok(t) => {
                    let e = &t.end;
                    let ok = e.rank(y) == n - p.up_count(y) as u32
                        && e.rank(w) == p.down_count(w) as u32 + 1
                        && e.rank(y) as i64 - e.rank(x) as i64 == k;
                    if !ok {
                        return (runs, false);
                    }
                }
                Err(_) => return (runs, false),
            }
        }
    }
    (runs, true)
}

/// Which instances the scan visits and what it runs on them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Run the normalising construction on every witnessed instance.
    pub replay: bool,
    /// Skip incomparable pairs.
    pub comparable_only: bool,
}

fn scan_one(p: &Poset, opts: ScanOptions) -> ConjectureScan {
    let n = p.len();
    let ni = n as i64;
    let table = ExtensionTable::new(p);
    let dual = p.dual();
    let mut out = ConjectureScan {
        posets: 1,
        ..Default::default()
    };
    for x in 0..n {
        for y in 0..n {
            if x == y || (opts.comparable_only && !p.comparable(x, y)) {
                continue;
            }
            let f = table.f_counts(x, y);
            let flags = table.witness_flags(p, x, y);
            for k in 2..=ni - 2 {
                let idx = (k + ni) as usize;
                let counts = [f[idx - 1], f[idx], f[idx + 1]];
                if counts[1] == 0 {
                    continue;
                }
                out.instances += 1;
                let a = counts[0] == counts[1] && counts[1] == counts[2];
                let (bx, by) = flags[idx];
                let b = bx || by;
                let c = either_midway(p, x, y, k).expect("distinct elements");
                out.count_a += a as u64;
                out.count_b += b as u64;
                out.count_c += c as u64;
                if p.comparable(x, y) {
                    let literal = literal_midway(p, x, y, k)
                        || super::dual_midway_property(p, x, y, k).unwrap();
                    out.literal_midway_disagreements += (literal != b) as u64;
                }
                let specimen = || Specimen {
                    poset: p.clone(),
                    x,
                    y,
                    k,
                    counts,
                };
                if b != c {
                    out.bc_violations.push(specimen());
                }
                if b && !a {
                    out.ba_violations.push(specimen());
                }
                if a && !c {
                    out.specimens.push(specimen());
                }
                if opts.replay {
                    let mut ok = true;
                    if bx {
                        let (runs, good) = replay_claims(p, &table, x, y, k, false);
                        out.replays += runs;
                        ok &= good;
                    }
                    if by {
                        // Witness y: the same construction in the dual poset
                        // with the pair (y, x) and reversed extensions.
                        let (runs, good) = replay_claims(&dual, &table, y, x, k, true);
                        out.replays += runs;
                        ok &= good;
                    }
                    if !ok {
                        out.replay_failures.push(specimen());
                    }
                }
            }
        }
    }
    out
}

/// Scans every poset of `posets` over every ordered pair of distinct
/// elements (or only comparable ones).
pub fn conjecture_scan(posets: &[Poset], opts: ScanOptions) -> ConjectureScan {
    posets
        .par_iter()
        .map(|p| scan_one(p, opts))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(ConjectureScan::default(), ConjectureScan::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::unlabeled_posets;
    use crate::region::enumerate_regions;

    #[test]
    fn vanishing_windows_match_enumeration() {
        for n in 1..=6 {
            for p in unlabeled_posets(n) {
                let s = vanishing_suite(&p);
                assert!(
                    s.stanley_mismatches.is_empty(),
                    "{p:?} {:?}",
                    s.stanley_mismatches
                );
                assert!(s.ks_mismatches.is_empty(), "{p:?} {:?}", s.ks_mismatches);
            }
        }
    }

    #[test]
    fn region_suite_is_clean_on_small_regions() {
        for a in 0..=4 {
            for b in 0..=4 {
                for r in enumerate_regions(a, b) {
                    let s = region_equality_suite(&r);
                    assert!(s.q_ks_failures.is_empty(), "{r:?}");
                    assert!(
                        s.stanley_discrepancies.is_empty(),
                        "{r:?} {:?}",
                        s.stanley_discrepancies
                    );
                    assert!(
                        s.pentagon_svh_mismatches.is_empty(),
                        "{r:?} {:?}",
                        s.pentagon_svh_mismatches
                    );
                    assert!(
                        s.ks_discrepancies.is_empty(),
                        "{r:?} {:?}",
                        s.ks_discrepancies
                    );
                }
            }
        }
    }

    #[test]
    fn equality_scan_on_small_posets() {
        let opts = ScanOptions {
            replay: true,
            comparable_only: false,
        };
        for n in 4..=6 {
            let s = conjecture_scan(&unlabeled_posets(n), opts);
            assert!(
                s.ba_violations.is_empty(),
                "n={n} {:?}",
                s.ba_violations.first()
            );
            assert!(
                s.replay_failures.is_empty(),
                "n={n} {:?}",
                s.replay_failures.first()
            );
            assert_eq!(s.comparable_bc_violations().count(), 0);
            assert_eq!(s.literal_midway_disagreements > 0, n >= 5);
            assert!(s.count_b > 0);
            assert_eq!(s.replays > 0, n >= 5);
            // Every disagreement between the witness and the midway
            // properties is a witnessed instance on an incomparable pair.
            for v in &s.bc_violations {
                assert!(v.poset.incomparable(v.x, v.y));
                assert!(!either_midway(&v.poset, v.x, v.y, v.k).unwrap());
            }
        }
    }

    #[test]
    fn witness_without_midway_on_an_incomparable_pair() {
        // An isolated x next to the "V" 1, 2 < 3, with y = 3 and k = 2: the
        // fiber is {1 x 2 3, 2 x 1 3}, x is flanked by incomparable elements
        // and F(1) = F(2) = F(3) = 2, but f(y) = 2 = k and g(x) = 0 rule
        // out both midway properties.
        let p = Poset::from_relations(4, &[(1, 3), (2, 3)]).unwrap();
        let w = crate::equality::condition_b_witness(&p, 0, 3, 2)
            .unwrap()
            .expect("witness");
        assert_eq!(w.z, 0);
        assert!(!either_midway(&p, 0, 3, 2).unwrap());
        let s = conjecture_scan(&[p], ScanOptions::default());
        assert_eq!(s.bc_violations.len(), 1);
        assert_eq!(s.bc_violations[0].counts, [2, 2, 2]);
        assert_eq!(s.specimens.len(), 1);
    }

    #[test]
    fn comparable_only_scan_upholds_the_equivalence() {
        let opts = ScanOptions {
            replay: false,
            comparable_only: true,
        };
        let s = conjecture_scan(&unlabeled_posets(6), opts);
        assert!(s.theorems_hold());
        assert!(s.instances > 0 && s.specimens.is_empty());
    }
}
