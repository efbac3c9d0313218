//! Single-column Gaussian binomial sums: the two finite pentagonal-number
//! sums that telescope to 1, and the quadratic/cubic style single sums with
//! monomial (or vanishing) right sides.
//!
//! The heavy left sides walk from one summand to the next by multiplying
//! and exactly dividing a dense q-coefficient vector by binomials `1 - q^d`,
//! so no Gaussian binomial is ever rebuilt from scratch. Every division is
//! remainder-checked.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::laurent::{ExponentVector, LaurentError, LaurentPolynomial, SignedMonomial, Variable};
use crate::qkit::factored::{divide_atom_multiset, AtomMultiset};
use crate::qkit::{cleared_sum, q_binomial, PochhammerFactorSet, QkitError};

use super::{req, EngineError, Params, SideEval};

// ---------------------------------------------------------------------------
// Dense univariate helpers (coefficient vectors indexed by q-exponent)
// ---------------------------------------------------------------------------

/// Multiplies the coefficient vector in place by `1 - q^d`.
fn walk_mul(v: &mut Vec<BigInt>, d: usize) {
    if d == 0 {
        v.clear();
        return;
    }
    let old_len = v.len();
    v.resize(old_len + d, BigInt::ZERO);
    // new[t] = old[t] - old[t-d]; descending keeps sources unmodified.
    for t in (d..old_len + d).rev() {
        if !v[t - d].is_zero() {
            let (head, tail) = v.split_at_mut(t);
            tail[0] -= &head[t - d];
        }
    }
}

/// Divides the coefficient vector in place by `1 - q^d`; the division must
/// be exact, otherwise the vector is left unusable and an error returned.
fn walk_div(v: &mut Vec<BigInt>, d: usize) -> Result<(), EngineError> {
    if v.iter().all(Zero::is_zero) {
        v.clear();
        return Ok(());
    }
    if d == 0 || v.len() < d {
        return Err(EngineError::Ring(LaurentError::NonDivisible));
    }
    // quotient[t] = self[t] + quotient[t-d]; ascending reuses the buffer.
    for t in d..v.len() {
        if !v[t - d].is_zero() {
            let (head, tail) = v.split_at_mut(t);
            tail[0] += &head[t - d];
        }
    }
    // The top d entries now hold the remainder witnesses.
    let cut = v.len() - d;
    if v[cut..].iter().any(|c| !c.is_zero()) {
        return Err(EngineError::Ring(LaurentError::NonDivisible));
    }
    v.truncate(cut);
    Ok(())
}

/// Multiplies by q^d (prepends d zero coefficients).
fn shift_up(v: &mut Vec<BigInt>, d: usize) {
    if d == 0 || v.is_empty() {
        return;
    }
    let mut shifted = vec![BigInt::ZERO; d];
    shifted.append(v);
    *v = shifted;
}

/// `acc += (-1)^negate * q^offset * b`.
fn accumulate(acc: &mut Vec<BigInt>, b: &[BigInt], offset: i64, negate: bool) {
    debug_assert!(offset >= 0, "accumulation below q^0");
    let off = offset as usize;
    if acc.len() < off + b.len() {
        acc.resize(off + b.len(), BigInt::ZERO);
    }
    for (t, c) in b.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if negate {
            acc[off + t] -= c;
        } else {
            acc[off + t] += c;
        }
    }
}

fn vec_to_poly(v: Vec<BigInt>) -> LaurentPolynomial {
    LaurentPolynomial::from_terms(v.into_iter().enumerate().filter_map(|(e, c)| {
        (!c.is_zero()).then(|| (ExponentVector::var_pow(Variable::Q, e as i64), c))
    }))
}

// ---------------------------------------------------------------------------
// Finite pentagonal-number sums
// ---------------------------------------------------------------------------

/// One family `sum_j (-1)^j q^{exponent(j)} B_j(L)` walked from `start_j(L)`
/// down to `-L`, where the step from B_j to B_{j-1} multiplies by two
/// binomials and exactly divides by two.
struct WalkSpec {
    start_j: fn(i64) -> i64,
    /// Coefficient vector of the starting Gaussian binomial (all ones).
    start_len: fn(i64) -> usize,
    /// Binomial exponents multiplied in when stepping from j to j-1.
    mul_exps: fn(i64, i64) -> [i64; 2],
    /// Binomial exponents divided out when stepping from j to j-1.
    div_exps: fn(i64, i64) -> [i64; 2],
    exponent: fn(i64) -> i64,
}

/// `[2L-j, L+j]` starting at j = floor(L/2) where the column collapses to 1
/// (L even) or to the all-ones row `[m, 1]` (L odd); the summand exponent is
/// the pentagonal number j(3j+1)/2.
const FIRST_PENTAGONAL: WalkSpec = WalkSpec {
    start_j: |l| l / 2,
    start_len: |l| {
        if l % 2 == 0 {
            1
        } else {
            (3 * l + 1) as usize / 2
        }
    },
    mul_exps: |l, j| [2 * l - j + 1, l + j],
    div_exps: |l, j| [l - 2 * j + 1, l - 2 * j + 2],
    exponent: |j| j * (3 * j + 1) / 2,
};

/// `[2L-j+1, L+j]` starting at j = floor((L+1)/2); the summand exponent is
/// the pentagonal number j(3j-1)/2.
const SECOND_PENTAGONAL: WalkSpec = WalkSpec {
    start_j: |l| (l + 1) / 2,
    start_len: |l| {
        if l % 2 == 1 {
            1
        } else {
            (3 * l + 2) as usize / 2
        }
    },
    mul_exps: |l, j| [2 * l - j + 2, l + j],
    div_exps: |l, j| [l - 2 * j + 2, l - 2 * j + 3],
    exponent: |j| j * (3 * j - 1) / 2,
};

fn pentagonal_walk(l: i64, spec: &WalkSpec) -> Result<SideEval, EngineError> {
    let mut b: Vec<BigInt> = vec![BigInt::from(1); (spec.start_len)(l)];
    let mut acc: Vec<BigInt> = Vec::new();
    let mut summands = 0u64;
    let mut j = (spec.start_j)(l);
    loop {
        accumulate(&mut acc, &b, (spec.exponent)(j), j.rem_euclid(2) == 1);
        summands += 1;
        if j == -l {
            break;
        }
        // B_{j-1} = B_j * mul / div; multiplying first keeps every
        // intermediate a polynomial, so both divisions are exact.
        for e in (spec.mul_exps)(l, j) {
            walk_mul(&mut b, e as usize);
        }
        for e in (spec.div_exps)(l, j) {
            walk_div(&mut b, e as usize)?;
        }
        j -= 1;
    }
    Ok(SideEval::new(vec_to_poly(acc), summands))
}

pub(super) fn id3_lhs(p: &Params) -> Result<SideEval, EngineError> {
    pentagonal_walk(req(p, "L")?, &FIRST_PENTAGONAL)
}

pub(super) fn id4_lhs(p: &Params) -> Result<SideEval, EngineError> {
    pentagonal_walk(req(p, "L")?, &SECOND_PENTAGONAL)
}

pub(super) fn id3_rhs(_p: &Params) -> Result<SideEval, EngineError> {
    Ok(SideEval::new(LaurentPolynomial::one(), 1))
}

pub(super) fn id4_rhs(_p: &Params) -> Result<SideEval, EngineError> {
    Ok(SideEval::new(LaurentPolynomial::one(), 1))
}

/// Summand `(-1)^j q^{j(3j+1)/2} [2L-j, L+j]` built directly.
pub fn id3_term(l: i64, j: i64) -> LaurentPolynomial {
    let mono = SignedMonomial {
        negative: j.rem_euclid(2) == 1,
        mono: ExponentVector::var_pow(Variable::Q, j * (3 * j + 1) / 2),
    };
    q_binomial(2 * l - j, l + j, 1).mul_monomial(&mono)
}

/// Summand `(-1)^j q^{j(3j-1)/2} [2L-j+1, L+j]` built directly.
pub fn id4_term(l: i64, j: i64) -> LaurentPolynomial {
    let mono = SignedMonomial {
        negative: j.rem_euclid(2) == 1,
        mono: ExponentVector::var_pow(Variable::Q, j * (3 * j - 1) / 2),
    };
    q_binomial(2 * l - j + 1, l + j, 1).mul_monomial(&mono)
}

// ---------------------------------------------------------------------------
// Cubic-style single sums
// ---------------------------------------------------------------------------

/// Exponent clearing the lowest q-power of the sum below: ceil(n(n-1)/6).
fn clearing_exponent(n: i64) -> i64 {
    (n * (n - 1) + 5) / 6
}

pub(super) fn cubic_a0_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let down = SignedMonomial::q_pow(-n);
    let q = SignedMonomial::q_pow(1);
    let mut terms = Vec::new();
    for k in 0..=n / 2 {
        let mut t = PochhammerFactorSet::from_unit(SignedMonomial::q_pow(k));
        t.mul_pochhammer(&down, 2 * k, 1);
        t.div_pochhammer(&q, k, 1).map_err(EngineError::from)?;
        t.div_pochhammer(&down, k, 1).map_err(EngineError::from)?;
        terms.push(t);
    }
    let multiplier = PochhammerFactorSet::from_unit(SignedMonomial::q_pow(clearing_exponent(n)));
    let poly = cleared_sum(&terms, &multiplier)?;
    Ok(SideEval::new(poly, (n / 2 + 1) as u64))
}

pub(super) fn cubic_a0_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let poly = if n % 3 == 2 {
        LaurentPolynomial::zero()
    } else if (n / 3) % 2 == 1 {
        LaurentPolynomial::constant(-1)
    } else {
        LaurentPolynomial::one()
    };
    Ok(SideEval::new(poly, 1))
}

/// Term k of the cleared cubic-style sum:
/// `q^{ceil(n(n-1)/6)+k} (q^{-n};q)_{2k} / ((q;q)_k (q^{-n};q)_k)` as an
/// exact polynomial (the inner ratio telescopes, the q-factorial divides).
pub fn cubic_sum_normalized_term(n: i64, k: i64) -> Result<LaurentPolynomial, QkitError> {
    let down = SignedMonomial::q_pow(-n);
    let mut t = PochhammerFactorSet::from_unit(SignedMonomial::q_pow(clearing_exponent(n) + k));
    t.mul_pochhammer(&down, 2 * k, 1);
    t.div_pochhammer(&down, k, 1)?;
    let numerator = t.expand()?;
    let factorial: AtomMultiset = (1..=k).map(|i| (SignedMonomial::q_pow(i), 1)).collect();
    divide_atom_multiset(numerator, &factorial)
}

pub(super) fn cubic_ainf_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    // u_k = q^{C(k,2)} [n-k, k];
    // u_{k+1} = u_k * q^k (1-q^{n-2k})(1-q^{n-2k-1}) / ((1-q^{n-k})(1-q^{k+1}))
    let mut u: Vec<BigInt> = vec![BigInt::from(1)];
    let mut acc: Vec<BigInt> = Vec::new();
    let kmax = n / 2;
    for k in 0..=kmax {
        accumulate(&mut acc, &u, 0, k % 2 == 1);
        if k == kmax {
            break;
        }
        walk_mul(&mut u, (n - 2 * k) as usize);
        walk_mul(&mut u, (n - 2 * k - 1) as usize);
        shift_up(&mut u, k as usize);
        walk_div(&mut u, (n - k) as usize)?;
        walk_div(&mut u, (k + 1) as usize)?;
    }
    Ok(SideEval::new(vec_to_poly(acc), (kmax + 1) as u64))
}

pub(super) fn cubic_ainf_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let poly = if n % 3 == 2 {
        LaurentPolynomial::zero()
    } else {
        let mono = SignedMonomial {
            negative: (n / 3) % 2 == 1,
            mono: ExponentVector::var_pow(Variable::Q, n * (n - 1) / 6),
        };
        LaurentPolynomial::from_monomial(&mono)
    };
    Ok(SideEval::new(poly, 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::params;
    use crate::qkit::binom2;

    #[test]
    fn vector_multiply_divide_roundtrip() {
        let mut v: Vec<BigInt> = [1, 2, 3].into_iter().map(BigInt::from).collect();
        walk_mul(&mut v, 2);
        walk_div(&mut v, 2).unwrap();
        assert_eq!(
            v,
            [1, 2, 3].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        let mut w: Vec<BigInt> = [1, 1].into_iter().map(BigInt::from).collect();
        assert!(walk_div(&mut w, 1).is_err());
    }

    #[test]
    fn first_pentagonal_walk_matches_direct_summation() {
        for l in 0..=8 {
            let walked = id3_lhs(&params(&[("L", l)])).unwrap();
            let mut direct = LaurentPolynomial::zero();
            for j in -l..=l / 2 {
                direct.add_assign(&id3_term(l, j));
            }
            assert_eq!(walked.poly, direct, "L={l}");
            assert_eq!(walked.summands, (l + l / 2 + 1) as u64);
        }
    }

    #[test]
    fn second_pentagonal_walk_matches_direct_summation() {
        for l in 0..=8 {
            let walked = id4_lhs(&params(&[("L", l)])).unwrap();
            let mut direct = LaurentPolynomial::zero();
            for j in -l..=(l + 1) / 2 {
                direct.add_assign(&id4_term(l, j));
            }
            assert_eq!(walked.poly, direct, "L={l}");
        }
    }

    #[test]
    fn alternating_column_walk_matches_direct_summation() {
        for n in 0..=12 {
            let walked = cubic_ainf_lhs(&params(&[("n", n)])).unwrap();
            let mut direct = LaurentPolynomial::zero();
            for k in 0..=n / 2 {
                let mono = SignedMonomial {
                    negative: k % 2 == 1,
                    mono: ExponentVector::var_pow(Variable::Q, binom2(k)),
                };
                direct.add_assign(&q_binomial(n - k, k, 1).mul_monomial(&mono));
            }
            assert_eq!(walked.poly, direct, "n={n}");
        }
    }

    #[test]
    fn cleared_sum_matches_termwise_division() {
        for n in 0..=9 {
            let whole = cubic_a0_lhs(&params(&[("n", n)])).unwrap().poly;
            let mut termwise = LaurentPolynomial::zero();
            for k in 0..=n / 2 {
                termwise.add_assign(&cubic_sum_normalized_term(n, k).unwrap());
            }
            assert_eq!(whole, termwise, "n={n}");
        }
    }

    #[test]
    fn cubic_sum_small_values() {
        for n in 0..=10 {
            let lhs = cubic_a0_lhs(&params(&[("n", n)])).unwrap().poly;
            let rhs = cubic_a0_rhs(&params(&[("n", n)])).unwrap().poly;
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
