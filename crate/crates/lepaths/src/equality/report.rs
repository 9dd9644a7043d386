//! Condition tables for the width-two equality characterisations.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::poset::{Chain, ChainPartition, Poset};
use crate::stats::{f_q_dist, n_q_dist, Distribution};

use super::fiber::{witness_in, ExtensionTable};
use super::pentagon_property;

/// The five equality conditions at one `k`:
///
/// * `a`: `V(k)^2 = V(k-1) V(k+1)` at `q = 1`;
/// * `b`: `V(k-1) = V(k) = V(k+1)`;
/// * `c`: `V_q(k)^2 = V_q(k-1) V_q(k+1)`;
/// * `d`: `V_q(k) = q^ε V_q(k-1) = q^-ε V_q(k+1)`;
/// * `e`: the structural condition (pentagon, resp. neighbour witness).
///
/// `consistent` says all five agree; `epsilon` is the shift that made `d`
/// hold, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub k: i64,
    pub conds: BTreeMap<char, bool>,
    pub epsilon: Option<i8>,
    pub consistent: bool,
}

impl EqualityReport {
    fn new(k: i64, conds: [bool; 5], epsilon: Option<i8>) -> EqualityReport {
        let conds: BTreeMap<char, bool> =
            ['a', 'b', 'c', 'd', 'e'].into_iter().zip(conds).collect();
        let consistent = conds.values().all(|&v| v == conds[&'a']);
        EqualityReport {
            k,
            conds,
            epsilon,
            consistent,
        }
    }
}

/// `p^2 = l h` at `q = 1` and as polynomials, and `l = m = h` at `q = 1`.
fn numeric_conditions(l: &QPoly, m: &QPoly, h: &QPoly) -> [bool; 3] {
    let (l1, m1, h1): (BigUint, BigUint, BigUint) = (l.eval_one(), m.eval_one(), h.eval_one());
    [&m1 * &m1 == &l1 * &h1, l1 == m1 && m1 == h1, m * m == l * h]
}

/// `m = q^ε l = q^-ε h`.
fn shifted(l: &QPoly, m: &QPoly, h: &QPoly, eps: i64) -> bool {
    l.shift_signed(eps).as_ref() == Some(m) && m.shift_signed(eps).as_ref() == Some(h)
}

fn window(d: &Distribution<QPoly>, k: i64) -> (QPoly, QPoly, QPoly) {
    (d.get(k - 1), d.get(k), d.get(k + 1))
}

/// Conditions for the position statistic of `x` at `k`; `d` uses `ε = 1`
/// for `x` in the first chain and `ε = -1` for the second, `e` is the
/// `k`-pentagon property.
pub fn stanley_equality_report(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    k: i64,
) -> Result<EqualityReport> {
    let d = n_q_dist(p, cp, x)?;
    let (l, m, h) = window(&d, k);
    let [a, b, c] = numeric_conditions(&l, &m, &h);
    let eps = if cp.chain_of(x) == Chain::First {
        1
    } else {
        -1
    };
    let dd = shifted(&l, &m, &h, eps);
    Ok(EqualityReport::new(
        k,
        [a, b, c, dd, pentagon_property(p, cp, x, k)],
        dd.then_some(eps as i8),
    ))
}

/// Conditions for the gap statistic of a same-chain pair at `k`; `ε` in `d`
/// is searched over `±1`, `e` is the neighbour witness on the `k`-fiber.
pub fn ks_equality_report(
    p: &Poset,
    cp: &ChainPartition,
    x: usize,
    y: usize,
    k: i64,
) -> Result<EqualityReport> {
    if !cp.same_chain(x, y) {
        return Err(Error::NotSameChain { x, y });
    }
    let d = f_q_dist(p, cp, x, y)?;
    let (l, m, h) = window(&d, k);
    let [a, b, c] = numeric_conditions(&l, &m, &h);
    let eps = [1i64, -1].into_iter().find(|&e| shifted(&l, &m, &h, e));
    let table = ExtensionTable::new(p);
    let e = witness_in(&table, p, x, y, k).is_some();
    Ok(EqualityReport::new(
        k,
        [a, b, c, eps.is_some(), e],
        eps.map(|e| e as i8),
    ))
}
