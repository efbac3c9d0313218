//! Shared evaluator for right sides of the shape
//! `sum (-1)^s z^e q^{T_i+T_j+T_k+d} [L-i,j][L-j,k][L-k,i]` over the
//! region `{i,j,k >= 0 : i+j <= L, j+k <= L, k+i <= L}`.
//!
//! Per summand the three Gaussian-binomial coefficient vectors are
//! convolved as plain integer arrays and accumulated into a row per
//! z-exponent. Arithmetic runs in `i128` with overflow checks and
//! restarts in `BigInt` if a product or sum ever overflows.

use std::collections::HashMap;
use std::rc::Rc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::laurent::{ExponentVector, LaurentPolynomial, SignedMonomial, Variable};
use crate::qkit::{q_binomial, triangular};

use super::SideEval;

/// Shape of one triple-sum right side; each callback receives `(i, j, k)`.
pub(super) struct TripleSpec {
    /// Exponent of -1 on the summand.
    pub sign_exp: fn(i64, i64, i64) -> i64,
    /// Exponent of z on the summand.
    pub z_exp: fn(i64, i64, i64) -> i64,
    /// Offset added to the q-exponent T_i + T_j + T_k.
    pub q_shift: fn(i64, i64, i64) -> i64,
}

pub(super) struct Overflow;

pub(super) trait Coeff: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_bigint(b: &BigInt) -> Result<Self, Overflow>;
    fn into_bigint(self) -> BigInt;
    /// `self += a * b`, negated when `negate` is set.
    fn add_mul(&mut self, a: &Self, b: &Self, negate: bool) -> Result<(), Overflow>;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn from_bigint(b: &BigInt) -> Result<Self, Overflow> {
        b.to_i128().ok_or(Overflow)
    }

    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }

    fn add_mul(&mut self, a: &Self, b: &Self, negate: bool) -> Result<(), Overflow> {
        let mut prod = a.checked_mul(*b).ok_or(Overflow)?;
        if negate {
            prod = prod.checked_neg().ok_or(Overflow)?;
        }
        *self = self.checked_add(prod).ok_or(Overflow)?;
        Ok(())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        BigInt::ZERO
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_bigint(b: &BigInt) -> Result<Self, Overflow> {
        Ok(b.clone())
    }

    fn into_bigint(self) -> BigInt {
        self
    }

    fn add_mul(&mut self, a: &Self, b: &Self, negate: bool) -> Result<(), Overflow> {
        let prod = a * b;
        if negate {
            *self -= prod;
        } else {
            *self += prod;
        }
        Ok(())
    }
}

/// Coefficient vector of a Gaussian binomial, indexed by q-exponent.
fn q_vec<C: Coeff>(p: &LaurentPolynomial) -> Result<Vec<C>, Overflow> {
    let deg = p
        .iter_terms()
        .map(|(m, _)| m.get(Variable::Q))
        .max()
        .unwrap_or(0);
    let mut v = vec![C::zero(); deg as usize + 1];
    for (m, c) in p.iter_terms() {
        v[m.get(Variable::Q) as usize] = C::from_bigint(c)?;
    }
    Ok(v)
}

type VecCache<C> = HashMap<(i64, i64), Rc<Vec<C>>>;

fn cached_q_vec<C: Coeff>(cache: &mut VecCache<C>, n: i64, k: i64) -> Result<Rc<Vec<C>>, Overflow> {
    if let Some(v) = cache.get(&(n, k)) {
        return Ok(v.clone());
    }
    let v = Rc::new(q_vec::<C>(&q_binomial(n, k, 1))?);
    cache.insert((n, k), v.clone());
    Ok(v)
}

fn convolve<C: Coeff>(a: &[C], b: &[C]) -> Result<Vec<C>, Overflow> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (s, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (t, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[s + t].add_mul(ca, cb, false)?;
        }
    }
    Ok(out)
}

/// Rows keyed by `(group, z_exponent)`, each a coefficient vector indexed by
/// the absolute q-exponent.
type Rows<C> = HashMap<(i64, i64), Vec<C>>;

fn run<C: Coeff>(
    l: i64,
    spec: &TripleSpec,
    group_of: fn(i64, i64, i64) -> i64,
) -> Result<(Rows<C>, u64), Overflow> {
    let mut cache: VecCache<C> = HashMap::new();
    let mut rows: Rows<C> = HashMap::new();
    let mut summands = 0u64;
    for i in 0..=l {
        for j in 0..=l - i {
            let b1 = cached_q_vec(&mut cache, l - i, j)?;
            for k in 0..=(l - i).min(l - j) {
                summands += 1;
                let b2 = cached_q_vec(&mut cache, l - j, k)?;
                let b3 = cached_q_vec(&mut cache, l - k, i)?;
                let conv12 = convolve(&b1, &b2)?;
                let base = triangular(i) + triangular(j) + triangular(k) + (spec.q_shift)(i, j, k);
                debug_assert!(base >= 0, "triple summand fell below q^0");
                let base = base as usize;
                let negate = (spec.sign_exp)(i, j, k).rem_euclid(2) == 1;
                let key = (group_of(i, j, k), (spec.z_exp)(i, j, k));
                let row = rows.entry(key).or_default();
                let need = base + conv12.len() + b3.len() - 1;
                if row.len() < need {
                    row.resize(need, C::zero());
                }
                for (s, c12) in conv12.iter().enumerate() {
                    if c12.is_zero() {
                        continue;
                    }
                    for (t, c3) in b3.iter().enumerate() {
                        if c3.is_zero() {
                            continue;
                        }
                        row[base + s + t].add_mul(c12, c3, negate)?;
                    }
                }
            }
        }
    }
    Ok((rows, summands))
}

fn row_terms<C: Coeff>(z: i64, row: Vec<C>) -> impl Iterator<Item = (ExponentVector, BigInt)> {
    row.into_iter().enumerate().filter_map(move |(e, c)| {
        if c.is_zero() {
            return None;
        }
        let mono = ExponentVector::var_pow(Variable::Q, e as i64).with(Variable::Z, z);
        Some((mono, c.into_bigint()))
    })
}

fn rows_to_poly<C: Coeff>(rows: Rows<C>) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(rows.into_iter().flat_map(|((_, z), row)| row_terms(z, row)))
}

/// Evaluates the full triple sum as one polynomial.
pub(super) fn triple_sum(l: i64, spec: &TripleSpec) -> SideEval {
    match run::<i128>(l, spec, |_, _, _| 0) {
        Ok((rows, summands)) => SideEval::new(rows_to_poly(rows), summands),
        Err(Overflow) => {
            let (rows, summands) = run::<BigInt>(l, spec, |_, _, _| 0)
                .unwrap_or_else(|_| unreachable!("BigInt arithmetic does not overflow"));
            SideEval::new(rows_to_poly(rows), summands)
        }
    }
}

/// Evaluates the triple sum split into partial sums keyed by `group_of`,
/// for right sides where each group carries an extra polynomial factor.
pub(super) fn triple_sum_grouped(
    l: i64,
    spec: &TripleSpec,
    group_of: fn(i64, i64, i64) -> i64,
) -> (HashMap<i64, LaurentPolynomial>, u64) {
    let (rows, summands) = match run::<i128>(l, spec, group_of) {
        Ok(r) => r,
        Err(Overflow) => {
            let (rows, summands) = run::<BigInt>(l, spec, group_of)
                .unwrap_or_else(|_| unreachable!("BigInt arithmetic does not overflow"));
            return (collect_groups(rows), summands);
        }
    };
    (collect_groups(rows), summands)
}

fn collect_groups<C: Coeff>(rows: Rows<C>) -> HashMap<i64, LaurentPolynomial> {
    let mut by_group: HashMap<i64, Vec<(ExponentVector, BigInt)>> = HashMap::new();
    for ((g, z), row) in rows {
        by_group.entry(g).or_default().extend(row_terms(z, row));
    }
    by_group
        .into_iter()
        .map(|(g, terms)| (g, LaurentPolynomial::from_terms(terms)))
        .collect()
}

/// One summand of the triple sum as a standalone polynomial. Outside the
/// admissible region some Gaussian binomial vanishes and the result is zero.
pub(super) fn triple_summand(
    l: i64,
    i: i64,
    j: i64,
    k: i64,
    spec: &TripleSpec,
) -> LaurentPolynomial {
    let product = q_binomial(l - i, j, 1)
        .mul(&q_binomial(l - j, k, 1))
        .mul(&q_binomial(l - k, i, 1));
    let q_exp = triangular(i) + triangular(j) + triangular(k) + (spec.q_shift)(i, j, k);
    let mono = SignedMonomial {
        negative: (spec.sign_exp)(i, j, k).rem_euclid(2) == 1,
        mono: ExponentVector::var_pow(Variable::Q, q_exp).with(Variable::Z, (spec.z_exp)(i, j, k)),
    };
    product.mul_monomial(&mono)
}

/// Number of lattice points in `{i,j,k >= 0 : i+j <= L, j+k <= L, k+i <= L}`
/// without enumerating them: grouping pairs (i, j) with i+j <= L by
/// m = max(i, j), the k-range contributes L - m + 1 points per pair, and
/// there are 2m+1 such pairs when 2m <= L but only 2(L-m)+2 once 2m > L.
pub fn analytic_triple_count(l: i64) -> u64 {
    if l < 0 {
        return 0;
    }
    let mut count = 0i64;
    for m in 0..=l {
        let pairs = if 2 * m <= l {
            2 * m + 1
        } else {
            2 * (l - m) + 2
        };
        count += pairs * (l - m + 1);
    }
    count as u64
}
