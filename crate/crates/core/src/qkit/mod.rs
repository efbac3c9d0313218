//! q-combinatorial primitives: triangular numbers, Pochhammer products,
//! memoized Gaussian binomial coefficients, and partition counts.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::laurent::dense::{Bounds, DensePoly};
use crate::laurent::{LaurentPolynomial, SignedMonomial, Variable};

pub mod factored;
pub mod phi;

pub use factored::{cleared_sum, simplify_ratio, PochhammerFactorSet, QkitError};
pub use phi::{phi_sum_cleared, phi_terms, HypergeometricSpec};

/// Triangular number `n(n+1)/2`; valid for negative `n` as well
/// (the product is always even).
pub fn triangular(n: i64) -> i64 {
    n * (n + 1) / 2
}

/// Binomial `n(n-1)/2`, the exponent in series like `sum (-1)^n b^n q^(n(n-1)/2)`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Expanded Pochhammer product `prod_{k=0}^{n-1} (1 - base*q^k)`.
pub fn pochhammer(base: &SignedMonomial, n: i64) -> LaurentPolynomial {
    pochhammer_step(base, n, 1)
}

/// Pochhammer product in the base `q^step`:
/// `prod_{k=0}^{n-1} (1 - base*q^(k*step))`.
pub fn pochhammer_step(base: &SignedMonomial, n: i64, step: i64) -> LaurentPolynomial {
    assert!(n >= 0, "Pochhammer length must be nonnegative");
    let atoms: Vec<SignedMonomial> = (0..n)
        .map(|k| base.mul(&SignedMonomial::q_pow(k * step)))
        .collect();
    factored::expand_unit_times_atoms(&SignedMonomial::one(), &atoms)
}

/// Gaussian binomial coefficient in the base `q^base_exp`: the polynomial
/// `(p;p)_n / ((p;p)_k (p;p)_{n-k})` with `p = q^base_exp` for `0 <= k <= n`,
/// and zero otherwise.
///
/// Small coefficients (measured by `k*(n-k)`, the degree in the base) come
/// from a memoized Pascal recurrence; large ones from a dense product scan,
/// where each division by `(1 - p^i)` is an exact linear pass with a
/// remainder check. The memo is shared across threads.
pub fn q_binomial(n: i64, k: i64, base_exp: i64) -> Arc<LaurentPolynomial> {
    assert!(base_exp >= 1, "base exponent must be positive");
    if k < 0 || n < 0 || k > n {
        return zero_poly();
    }
    let k = k.min(n - k);
    if k == 0 {
        return one_poly();
    }
    if k * (n - k) <= PASCAL_CAP {
        pascal_memoized(n, k, base_exp)
    } else {
        Arc::new(product_scan(n, k, base_exp))
    }
}

/// Above this degree the Pascal table would hold too many coefficients;
/// the product scan takes over. Pascal recursion from any admissible (n, k)
/// only visits pairs with smaller `k*(n-k)`, so the two regimes never mix.
const PASCAL_CAP: i64 = 600;

fn zero_poly() -> Arc<LaurentPolynomial> {
    static ZERO: OnceLock<Arc<LaurentPolynomial>> = OnceLock::new();
    ZERO.get_or_init(|| Arc::new(LaurentPolynomial::zero()))
        .clone()
}

fn one_poly() -> Arc<LaurentPolynomial> {
    static ONE: OnceLock<Arc<LaurentPolynomial>> = OnceLock::new();
    ONE.get_or_init(|| Arc::new(LaurentPolynomial::one()))
        .clone()
}

type BinomialMemo = RwLock<HashMap<(i64, i64, i64), Arc<LaurentPolynomial>>>;

fn memo() -> &'static BinomialMemo {
    static MEMO: OnceLock<BinomialMemo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn pascal_memoized(n: i64, k: i64, base_exp: i64) -> Arc<LaurentPolynomial> {
    debug_assert!(0 < k && k <= n - k);
    let key = (n, k, base_exp);
    if let Some(hit) = memo().read().unwrap().get(&key) {
        return hit.clone();
    }
    // [n k] = [n-1 k-1] + p^k [n-1 k]  with p = q^base_exp
    let left = q_binomial(n - 1, k - 1, base_exp);
    let right = q_binomial(n - 1, k, base_exp);
    let mut result = right.mul(&LaurentPolynomial::var_pow(Variable::Q, k * base_exp));
    result.add_assign(&left);
    let result = Arc::new(result);
    memo()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| result.clone())
        .clone()
}

fn product_scan(n: i64, k: i64, base_exp: i64) -> LaurentPolynomial {
    // numerator prod_{i=1}^{k} (1 - p^{n-k+i}) over denominator (p;p)_k
    let deg = base_exp * (k * (n - k) + triangular(k));
    let bounds = Bounds {
        min: [0; 5],
        max: [deg, 0, 0, 0, 0],
    };
    let mut dp = DensePoly::from_sparse(&LaurentPolynomial::one(), &bounds);
    for i in 1..=k {
        dp.mul_binomial(&SignedMonomial::q_pow(base_exp * (n - k + i)));
    }
    for i in 1..=k {
        dp.div_binomial_exact(&SignedMonomial::q_pow(base_exp * i))
            .expect("Gaussian binomial product scan must divide exactly");
    }
    dp.into_sparse()
}

/// Partition numbers `p(0..=d)` by the coin-style dynamic program over part
/// sizes; an oracle independent of any identity under verification.
pub fn partition_counts(d: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); d + 1];
    counts[0] = BigInt::from(1);
    for part in 1..=d {
        for total in part..=d {
            let (head, tail) = counts.split_at_mut(total);
            tail[0] += &head[total - part];
        }
    }
    counts
}
