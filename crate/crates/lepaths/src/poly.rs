//! Exact polynomial arithmetic for counting statistics.
//!
//! [`QPoly`] is a polynomial in one variable `q` with nonnegative integer
//! coefficients, [`ZPoly`] its signed counterpart (used for differences such as
//! `F(k)^2 - F(k-1)F(k+1)`), and [`MultiPoly`] / [`MultiZPoly`] are the
//! multivariate analogues in `q_1, ..., q_a`.
//!
//! Coefficients are arbitrary precision.  Univariate polynomials keep a dense
//! coefficient window starting at the lowest nonzero exponent; while every
//! coefficient fits in a machine word they are stored unboxed, and arithmetic
//! transparently promotes to big integers on overflow.  Values are always kept
//! in a canonical form, so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum UCoeffs {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

/// Polynomial in `q` with nonnegative arbitrary-precision coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    low: u32,
    coeffs: UCoeffs,
}

impl Default for QPoly {
    fn default() -> Self {
        QPoly::zero()
    }
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            low: 0,
            coeffs: UCoeffs::Small(Vec::new()),
        }
    }

    pub fn one() -> Self {
        QPoly::monomial(0, 1u64)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: u32, c: impl Into<BigUint>) -> Self {
        let c: BigUint = c.into();
        QPoly::from_big(exp, vec![c])
    }

    /// Builds `sum_i coeffs[i] * q^(low + i)`.
    pub fn from_dense(low: u32, coeffs: &[u64]) -> Self {
        QPoly::from_small(low, coeffs.to_vec())
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigUint>,
    {
        let mut map: BTreeMap<u32, BigUint> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        let Some((&low, _)) = map.iter().next() else {
            return QPoly::zero();
        };
        let high = *map.keys().next_back().unwrap();
        let mut dense = vec![BigUint::zero(); (high - low + 1) as usize];
        for (e, c) in map {
            dense[(e - low) as usize] = c;
        }
        QPoly::from_big(low, dense)
    }

    fn from_small(mut low: u32, mut v: Vec<u64>) -> Self {
        let lead = v.iter().position(|c| *c != 0);
        let Some(lead) = lead else {
            return QPoly::zero();
        };
        let trail = v.iter().rposition(|c| *c != 0).unwrap();
        v.truncate(trail + 1);
        v.drain(..lead);
        low += lead as u32;
        QPoly {
            low,
            coeffs: UCoeffs::Small(v),
        }
    }

    fn from_big(mut low: u32, mut v: Vec<BigUint>) -> Self {
        let Some(lead) = v.iter().position(|c| !c.is_zero()) else {
            return QPoly::zero();
        };
        let trail = v.iter().rposition(|c| !c.is_zero()).unwrap();
        v.truncate(trail + 1);
        v.drain(..lead);
        low += lead as u32;
        let small: Option<Vec<u64>> = v.iter().map(|c| c.to_u64()).collect();
        match small {
            Some(s) => QPoly {
                low,
                coeffs: UCoeffs::Small(s),
            },
            None => QPoly {
                low,
                coeffs: UCoeffs::Big(v),
            },
        }
    }

    fn from_wide(low: u32, v: Vec<u128>) -> Self {
        if v.iter().all(|c| *c <= u64::MAX as u128) {
            QPoly::from_small(low, v.into_iter().map(|c| c as u64).collect())
        } else {
            QPoly::from_big(low, v.into_iter().map(BigUint::from).collect())
        }
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            UCoeffs::Small(v) => v.len(),
            UCoeffs::Big(v) => v.len(),
        }
    }

    fn big_coeffs(&self) -> Vec<BigUint> {
        match &self.coeffs {
            UCoeffs::Small(v) => v.iter().map(|&c| BigUint::from(c)).collect(),
            UCoeffs::Big(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<u32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn degree(&self) -> Option<u32> {
        (!self.is_zero()).then(|| self.low + self.len() as u32 - 1)
    }

    pub fn coeff(&self, exp: u32) -> BigUint {
        if exp < self.low {
            return BigUint::zero();
        }
        let i = (exp - self.low) as usize;
        match &self.coeffs {
            UCoeffs::Small(v) => v.get(i).map_or_else(BigUint::zero, |&c| BigUint::from(c)),
            UCoeffs::Big(v) => v.get(i).cloned().unwrap_or_default(),
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> Vec<(u32, BigUint)> {
        self.big_coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as u32, c))
            .collect()
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigUint {
        match &self.coeffs {
            UCoeffs::Small(v) => {
                let mut acc: u128 = 0;
                let mut big = BigUint::zero();
                for &c in v {
                    match acc.checked_add(c as u128) {
                        Some(s) => acc = s,
                        None => {
                            big += acc;
                            acc = c as u128;
                        }
                    }
                }
                big + acc
            }
            UCoeffs::Big(v) => v.iter().sum(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: u32) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Multiplies by `q^k` for a possibly negative `k`; `None` if a negative
    /// exponent would result.
    pub fn shift_signed(&self, k: i64) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let low = self.low as i64 + k;
        (low >= 0).then(|| QPoly {
            low: low as u32,
            coeffs: self.coeffs.clone(),
        })
    }

    /// Coefficient reversal `q^d P(1/q)` about the given degree `d`.
    pub fn reflect(&self, d: u32) -> QPoly {
        let terms = self.terms();
        QPoly::from_terms(terms.into_iter().map(|(e, c)| (d - e, c)))
    }

    /// Adds `c * q^exp` in place.
    pub fn add_term(&mut self, exp: u32, c: u64) {
        if c == 0 {
            return;
        }
        *self = &*self + &QPoly::from_dense(exp, &[c]);
    }

    /// Coefficientwise comparison: `true` iff `self - other` has only
    /// nonnegative coefficients.
    pub fn dominates(&self, other: &QPoly) -> bool {
        (self - other).is_nonnegative()
    }

    pub fn to_zpoly(&self) -> ZPoly {
        match &self.coeffs {
            UCoeffs::Small(v) => {
                ZPoly::from_small(self.low, v.iter().map(|&c| c as i128).collect())
            }
            UCoeffs::Big(v) => ZPoly::from_big(
                self.low,
                v.iter()
                    .map(|c| BigInt::from_biguint(Sign::Plus, c.clone()))
                    .collect(),
            ),
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        let len = (high - low + 1) as usize;
        if let (UCoeffs::Small(a), UCoeffs::Small(b)) = (&self.coeffs, &rhs.coeffs) {
            let mut out = vec![0u64; len];
            let mut overflow = false;
            for (src, off) in [(a, self.low - low), (b, rhs.low - low)] {
                for (i, &c) in src.iter().enumerate() {
                    let slot = &mut out[off as usize + i];
                    match slot.checked_add(c) {
                        Some(s) => *slot = s,
                        None => overflow = true,
                    }
                }
            }
            if !overflow {
                return QPoly::from_small(low, out);
            }
        }
        let mut out = vec![BigUint::zero(); len];
        for (p, off) in [(self, self.low - low), (rhs, rhs.low - low)] {
            for (i, c) in p.big_coeffs().into_iter().enumerate() {
                out[off as usize + i] += c;
            }
        }
        QPoly::from_big(low, out)
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let low = self.low + rhs.low;
        let len = self.len() + rhs.len() - 1;
        if let (UCoeffs::Small(a), UCoeffs::Small(b)) = (&self.coeffs, &rhs.coeffs) {
            let mut out = vec![0u128; len];
            let mut overflow = false;
            'outer: for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    match out[i + j].checked_add(x as u128 * y as u128) {
                        Some(s) => out[i + j] = s,
                        None => {
                            overflow = true;
                            break 'outer;
                        }
                    }
                }
            }
            if !overflow {
                return QPoly::from_wide(low, out);
            }
        }
        let a = self.big_coeffs();
        let b = rhs.big_coeffs();
        let mut out = vec![BigUint::zero(); len];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        QPoly::from_big(low, out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Sub for &QPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &QPoly) -> ZPoly {
        &self.to_zpoly() - &rhs.to_zpoly()
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms()
                .into_iter()
                .map(|(e, c)| (e, BigInt::from(c)))
                .collect(),
        )
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: Vec<(u32, BigInt)>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (e, c)) in terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        let unit = mag.is_one();
        match (*e, unit) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{mag}q")?,
            (e, true) => write!(f, "q^{e}")?,
            (e, false) => write!(f, "{mag}q^{e}")?,
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum ZCoeffs {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

/// Polynomial in `q` with signed arbitrary-precision coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPoly {
    low: u32,
    coeffs: ZCoeffs,
}

impl Default for ZPoly {
    fn default() -> Self {
        ZPoly::zero()
    }
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly {
            low: 0,
            coeffs: ZCoeffs::Small(Vec::new()),
        }
    }

    pub fn monomial(exp: u32, c: impl Into<BigInt>) -> Self {
        ZPoly::from_big(exp, vec![c.into()])
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut acc = ZPoly::zero();
        for (e, c) in terms {
            acc = &acc + &ZPoly::monomial(e, c);
        }
        acc
    }

    fn from_small(mut low: u32, mut v: Vec<i128>) -> Self {
        let Some(lead) = v.iter().position(|c| *c != 0) else {
            return ZPoly::zero();
        };
        let trail = v.iter().rposition(|c| *c != 0).unwrap();
        v.truncate(trail + 1);
        v.drain(..lead);
        low += lead as u32;
        ZPoly {
            low,
            coeffs: ZCoeffs::Small(v),
        }
    }

    fn from_big(mut low: u32, mut v: Vec<BigInt>) -> Self {
        let Some(lead) = v.iter().position(|c| !c.is_zero()) else {
            return ZPoly::zero();
        };
        let trail = v.iter().rposition(|c| !c.is_zero()).unwrap();
        v.truncate(trail + 1);
        v.drain(..lead);
        low += lead as u32;
        let small: Option<Vec<i128>> = v.iter().map(|c| c.to_i128()).collect();
        match small {
            Some(s) => ZPoly {
                low,
                coeffs: ZCoeffs::Small(s),
            },
            None => ZPoly {
                low,
                coeffs: ZCoeffs::Big(v),
            },
        }
    }

    fn len(&self) -> usize {
        match &self.coeffs {
            ZCoeffs::Small(v) => v.len(),
            ZCoeffs::Big(v) => v.len(),
        }
    }

    fn big_coeffs(&self) -> Vec<BigInt> {
        match &self.coeffs {
            ZCoeffs::Small(v) => v.iter().map(|&c| BigInt::from(c)).collect(),
            ZCoeffs::Big(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 0
    }

    pub fn min_degree(&self) -> Option<u32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn degree(&self) -> Option<u32> {
        (!self.is_zero()).then(|| self.low + self.len() as u32 - 1)
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        if exp < self.low {
            return BigInt::zero();
        }
        let i = (exp - self.low) as usize;
        match &self.coeffs {
            ZCoeffs::Small(v) => v.get(i).map_or_else(BigInt::zero, |&c| BigInt::from(c)),
            ZCoeffs::Big(v) => v.get(i).cloned().unwrap_or_default(),
        }
    }

    pub fn terms(&self) -> Vec<(u32, BigInt)> {
        self.big_coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as u32, c))
            .collect()
    }

    /// True iff every coefficient is `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        match &self.coeffs {
            ZCoeffs::Small(v) => v.iter().all(|c| *c >= 0),
            ZCoeffs::Big(v) => v.iter().all(|c| !c.is_negative()),
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.big_coeffs().iter().sum()
    }

    pub fn shift(&self, k: u32) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Converts back to a [`QPoly`] when all coefficients are nonnegative.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        if !self.is_nonnegative() {
            return None;
        }
        Some(QPoly::from_terms(
            self.terms()
                .into_iter()
                .map(|(e, c)| (e, c.to_biguint().unwrap())),
        ))
    }

    fn combine(&self, rhs: &ZPoly, sign: i128) -> ZPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign > 0 { rhs.clone() } else { -rhs };
        }
        let low = self.low.min(rhs.low);
        let high = self.degree().unwrap().max(rhs.degree().unwrap());
        let len = (high - low + 1) as usize;
        if let (ZCoeffs::Small(a), ZCoeffs::Small(b)) = (&self.coeffs, &rhs.coeffs) {
            let mut out = vec![0i128; len];
            let mut ok = true;
            for (i, &c) in a.iter().enumerate() {
                out[(self.low - low) as usize + i] = c;
            }
            for (i, &c) in b.iter().enumerate() {
                let slot = &mut out[(rhs.low - low) as usize + i];
                match c.checked_mul(sign).and_then(|c| slot.checked_add(c)) {
                    Some(s) => *slot = s,
                    None => ok = false,
                }
            }
            if ok {
                return ZPoly::from_small(low, out);
            }
        }
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.big_coeffs().into_iter().enumerate() {
            out[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.big_coeffs().into_iter().enumerate() {
            if sign > 0 {
                out[(rhs.low - low) as usize + i] += c;
            } else {
                out[(rhs.low - low) as usize + i] -= c;
            }
        }
        ZPoly::from_big(low, out)
    }
}

impl From<&QPoly> for ZPoly {
    fn from(p: &QPoly) -> ZPoly {
        p.to_zpoly()
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::from_big(
            self.low,
            self.big_coeffs().into_iter().map(|c| -c).collect(),
        )
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        self.combine(rhs, 1)
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self.combine(rhs, -1)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;

    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let low = self.low + rhs.low;
        let len = self.len() + rhs.len() - 1;
        if let (ZCoeffs::Small(a), ZCoeffs::Small(b)) = (&self.coeffs, &rhs.coeffs) {
            let mut out = vec![0i128; len];
            let mut ok = true;
            'outer: for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    match x.checked_mul(y).and_then(|p| out[i + j].checked_add(p)) {
                        Some(s) => out[i + j] = s,
                        None => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                return ZPoly::from_small(low, out);
            }
        }
        let a = self.big_coeffs();
        let b = rhs.big_coeffs();
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        ZPoly::from_big(low, out)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms())
    }
}

/// Polynomial in `q_1, ..., q_arity` with nonnegative coefficients, keyed by
/// dense exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigUint>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        MultiPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u32>, c: impl Into<BigUint>) -> Self {
        let arity = exps.len();
        let mut p = MultiPoly::zero(arity);
        p.add_term(exps, c.into());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigUint> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> BigUint {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Adds `c * q^exps` in place.
    ///
    /// # Panics
    /// If `exps` has the wrong length.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigUint) {
        assert_eq!(exps.len(), self.arity, "exponent vector of wrong length");
        if c.is_zero() {
            return;
        }
        *self.terms.entry(exps).or_default() += c;
    }

    /// Value at `q_1 = ... = q_arity = 1`.
    pub fn eval_ones(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Substitutes `q_i := q^{weights[i]}`.
    pub fn specialize(&self, weights: &[u32]) -> Result<QPoly> {
        if weights.len() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: weights.len(),
            });
        }
        Ok(QPoly::from_terms(self.terms.iter().map(|(e, c)| {
            let exp: u32 = e.iter().zip(weights).map(|(a, w)| a * w).sum();
            (exp, c.clone())
        })))
    }

    pub fn checked_add(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(rhs.arity)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &MultiPoly) -> Result<MultiPoly> {
        self.check_arity(rhs.arity)?;
        let mut out = MultiPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &MultiPoly) -> Result<MultiZPoly> {
        self.check_arity(rhs.arity)?;
        let mut out: BTreeMap<Vec<u32>, BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), BigInt::from(c.clone())))
            .collect();
        for (e, c) in &rhs.terms {
            *out.entry(e.clone()).or_default() -= BigInt::from(c.clone());
        }
        out.retain(|_, c| !c.is_zero());
        Ok(MultiZPoly {
            arity: self.arity,
            terms: out,
        })
    }

    fn check_arity(&self, other: usize) -> Result<()> {
        if self.arity == other {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other,
            })
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_multi(
            f,
            self.terms.iter().map(|(e, c)| (e, BigInt::from(c.clone()))),
        )
    }
}

/// Signed multivariate polynomial (differences of [`MultiPoly`] values).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiZPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiZPoly {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }
}

impl fmt::Display for MultiZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_multi(f, self.terms.iter().map(|(e, c)| (e, c.clone())))
    }
}

fn write_multi<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Vec<u32>, BigInt)>,
) -> fmt::Result {
    let mut any = false;
    for (idx, (e, c)) in terms.enumerate() {
        any = true;
        if idx > 0 {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        } else if c.is_negative() {
            write!(f, "-")?;
        }
        let mag = c.abs();
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                if x == 1 {
                    format!("q{}", i + 1)
                } else {
                    format!("q{}^{x}", i + 1)
                }
            })
            .collect();
        match (mono.is_empty(), mag.is_one()) {
            (true, _) => write!(f, "{mag}")?,
            (false, true) => write!(f, "{}", mono.join("*"))?,
            (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
        }
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(terms: &[(u32, u64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (e, c)))
    }

    #[test]
    fn canonical_form_trims_zeros() {
        let p = QPoly::from_dense(3, &[0, 0, 5, 0]);
        assert_eq!(p, QPoly::monomial(5, 5u64));
        assert_eq!(QPoly::from_dense(2, &[0, 0]), QPoly::zero());
        assert_eq!(p.min_degree(), Some(5));
        assert_eq!(p.degree(), Some(5));
    }

    #[test]
    fn display_is_descending() {
        assert_eq!(q(&[(12, 3), (11, 1)]).to_string(), "3q^12 + q^11");
        assert_eq!((&q(&[(26, 1)]) - &q(&[(25, 1)])).to_string(), "q^26 - q^25");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn overflow_promotes_to_big_integers() {
        let big = QPoly::from_dense(0, &[u64::MAX, u64::MAX]);
        let sum = &big + &big;
        assert_eq!(sum.coeff(0), BigUint::from(u64::MAX) * 2u32);
        let sq = &sum * &sum;
        let expect = BigUint::from(u64::MAX) * BigUint::from(u64::MAX) * 4u32;
        assert_eq!(sq.coeff(0), expect);
        assert_eq!(sq.coeff(1), expect.clone() * 2u32);
        let diff = &sq - &sq;
        assert!(diff.is_zero());
        // Results that fit again are demoted, so equality stays structural.
        let back = (&sq.to_zpoly() - &(&sq - &QPoly::one()))
            .to_qpoly()
            .unwrap();
        assert_eq!(back, QPoly::one());
    }

    #[test]
    fn multipoly_specialization() {
        let mut p = MultiPoly::zero(2);
        p.add_term(vec![1, 2], BigUint::from(3u32));
        p.add_term(vec![0, 1], BigUint::from(1u32));
        assert_eq!(p.specialize(&[1, 1]).unwrap(), q(&[(3, 3), (1, 1)]));
        assert_eq!(p.specialize(&[2, 1]).unwrap(), q(&[(4, 3), (1, 1)]));
        assert!(p.specialize(&[1]).is_err());
        assert_eq!(p.eval_ones(), BigUint::from(4u32));
        let sq = p.checked_mul(&p).unwrap();
        assert_eq!(sq.coeff(&[2, 4]), BigUint::from(9u32));
        assert!(p
            .checked_sub(&sq)
            .unwrap()
            .terms()
            .values()
            .any(|c| c.is_negative()));
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        (0u32..6, prop::collection::vec(0u64..1_000_000, 0..6))
            .prop_map(|(l, v)| QPoly::from_dense(l, &v))
    }

    fn oracle_mul(a: &QPoly, b: &QPoly) -> BTreeMap<u32, BigUint> {
        let mut m = BTreeMap::new();
        for (e1, c1) in a.terms() {
            for (e2, c2) in b.terms() {
                *m.entry(e1 + e2).or_insert_with(BigUint::zero) += &c1 * &c2;
            }
        }
        m
    }

    proptest! {
        #[test]
        fn mul_matches_term_oracle(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            let expect = QPoly::from_terms(oracle_mul(&a, &b));
            prop_assert_eq!(prod, expect);
        }

        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
            prop_assert!((&a + &b).dominates(&a));
            let d = &(&a + &b) - &b;
            prop_assert_eq!(d.to_qpoly().unwrap(), a.clone());
        }

        #[test]
        fn zpoly_product_matches_qpoly_product(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a.to_zpoly() * &b.to_zpoly(), (&a * &b).to_zpoly());
        }
    }
}
