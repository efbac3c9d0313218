//! Truncated limiting-form suites.
//!
//! Each suite checks that a finite catalog instance, truncated to q-degree
//! `d`, agrees exactly with an independently built truncation of the infinite
//! product or series it converges to. Truncation after every factor keeps the
//! computation exact: a factor `1 + m` with q-degree above `d` is the
//! identity modulo q^{d+1}, so cutting the factor list at `d` loses nothing.

use crate::HarnessError;
use qid_core::identities::{evaluate_side, params, Side};
use qid_core::qkit::{partition_counts, pochhammer, triangular};
use qid_core::{ExponentVector, LaurentPolynomial, SignedMonomial, Variable};

pub const SUITES: &[&str] = &["pentagonal", "triple_product", "lebesgue", "stabilization"];

const Q: Variable = Variable::Q;
const Z: Variable = Variable::Z;

/// One named exact comparison inside a suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: String,
    pub degree: i64,
    pub checks: Vec<Check>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

pub fn run_suite(name: &str, degree: i64) -> Result<SuiteOutcome, HarnessError> {
    if degree < 0 {
        return Err(HarnessError::Plan(format!(
            "degree must be nonnegative, got {degree}"
        )));
    }
    let checks = match name {
        "pentagonal" => pentagonal(degree),
        "triple_product" => triple_product(degree)?,
        "lebesgue" => lebesgue(degree),
        "stabilization" => stabilization(degree)?,
        _ => {
            return Err(HarnessError::Plan(format!(
                "unknown suite {name}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteOutcome {
        suite: name.to_string(),
        degree,
        checks,
    })
}

fn check(name: &str, pass: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        pass,
        detail,
    }
}

/// `1 + m` for a signed monomial `m`.
fn one_plus(m: &SignedMonomial) -> LaurentPolynomial {
    LaurentPolynomial::one().add(&LaurentPolynomial::from_monomial(m))
}

/// z^ze * q^qe as a signed monomial.
fn zq(ze: i64, qe: i64) -> SignedMonomial {
    SignedMonomial::var_pow(Z, ze).mul(&SignedMonomial::q_pow(qe))
}

/// Smallest L with L(L+1)/2 > d.
fn smallest_size_exceeding(d: i64) -> i64 {
    let mut l = 0;
    while triangular(l) <= d {
        l += 1;
    }
    l
}

/// Euler product prod_{k=1..d} (1 - q^k), truncated to q-degree d throughout.
fn euler_product(d: i64) -> LaurentPolynomial {
    let mut product = LaurentPolynomial::one();
    for k in 1..=d {
        product = product.mul(&one_plus(&SignedMonomial::q_pow(k).neg()));
        product = product.truncate(Q, d);
    }
    product
}

/// The signed pentagonal-number series against the Euler product, and the
/// Euler product against the partition-count series: both exact mod q^{d+1}.
fn pentagonal(d: i64) -> Vec<Check> {
    let product = euler_product(d);
    let mut series = LaurentPolynomial::zero();
    for j in -(d + 1)..=(d + 1) {
        let e = j * (3 * j - 1) / 2;
        if (0..=d).contains(&e) {
            let sign = if j.rem_euclid(2) == 1 { -1 } else { 1 };
            series.add_assign(&LaurentPolynomial::term(
                sign,
                ExponentVector::var_pow(Q, e),
            ));
        }
    }
    let counts = partition_counts(d as usize);
    let partitions = LaurentPolynomial::from_terms(
        counts
            .into_iter()
            .enumerate()
            .map(|(m, c)| (ExponentVector::var_pow(Q, m as i64), c)),
    );
    let inverted = product.mul(&partitions).truncate(Q, d);
    vec![
        check(
            "series_matches_product",
            series == product,
            format!("signed exponent series vs product of {d} factors"),
        ),
        check(
            "product_inverts_partition_series",
            inverted.is_one(),
            "product times partition generating series is 1".to_string(),
        ),
    ]
}

/// The finite two-variable sum, times its removed (1 + z) factor, against
/// the full triple product, both truncated to q-degree d.
fn triple_product(d: i64) -> Result<Vec<Check>, HarnessError> {
    let l = smallest_size_exceeding(d);
    let lhs = evaluate_side("id1", Side::Lhs, &params(&[("L", l)]))
        .map_err(|e| HarnessError::Internal(e.to_string()))?;
    let sum_side = lhs.poly.mul(&one_plus(&zq(1, 0))).truncate(Q, d);
    let mut product = euler_product(d);
    for k in 1..=(d + 1) {
        product = product.mul(&one_plus(&zq(1, k - 1))).truncate(Q, d);
    }
    for k in 1..=d {
        product = product.mul(&one_plus(&zq(-1, k))).truncate(Q, d);
    }
    Ok(vec![check(
        "sum_matches_triple_product",
        sum_side == product,
        format!("size L={l} is the smallest with L(L+1)/2 > {d}"),
    )])
}

/// The q-triangular-weighted sum, cleared by (q;q)_J, against the paired
/// infinite product, both truncated to q-degree d.
fn lebesgue(d: i64) -> Vec<Check> {
    let j_max = smallest_size_exceeding(d) - 1;
    let mut sum = LaurentPolynomial::zero();
    for j in 0..=j_max {
        let term = LaurentPolynomial::var_pow(Q, triangular(j))
            .mul(&pochhammer(&zq(1, 1).neg(), j))
            .mul(&pochhammer(&SignedMonomial::q_pow(j + 1), j_max - j));
        sum.add_assign(&term);
    }
    let sum = sum.truncate(Q, d);
    let mut product = pochhammer(&SignedMonomial::q_pow(1), j_max).truncate(Q, d);
    for k in 1..=(d / 2) {
        product = product.mul(&one_plus(&zq(1, 2 * k))).truncate(Q, d);
    }
    for k in 1..=d {
        product = product
            .mul(&one_plus(&SignedMonomial::q_pow(k)))
            .truncate(Q, d);
    }
    vec![check(
        "sum_matches_paired_product",
        sum == product,
        format!("J={j_max} is the largest with J(J+1)/2 <= {d}"),
    )]
}

/// Coefficient stabilization: the left side truncated to q-degree d is
/// already independent of L once L(L+1)/2 > d.
fn stabilization(d: i64) -> Result<Vec<Check>, HarnessError> {
    let l = smallest_size_exceeding(d);
    let side = |size: i64| {
        evaluate_side("id1", Side::Lhs, &params(&[("L", size)]))
            .map(|s| s.poly.truncate(Q, d))
            .map_err(|e| HarnessError::Internal(e.to_string()))
    };
    let at_l = side(l)?;
    let next = side(l + 1)?;
    Ok(vec![check(
        "truncation_is_stable",
        at_l == next,
        format!("sizes L={l} and L={} agree below q^{}", l + 1, d + 1),
    )])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_small_degree() {
        for suite in SUITES {
            let outcome = run_suite(suite, 12).unwrap();
            assert!(outcome.passed(), "{suite} failed: {:?}", outcome.checks);
        }
    }

    #[test]
    fn degree_zero_is_handled() {
        for suite in SUITES {
            assert!(run_suite(suite, 0).unwrap().passed(), "{suite} at 0");
        }
    }

    #[test]
    fn bad_requests_are_plan_errors() {
        assert!(matches!(run_suite("nope", 5), Err(HarnessError::Plan(_))));
        assert!(matches!(
            run_suite("pentagonal", -1),
            Err(HarnessError::Plan(_))
        ));
    }

    #[test]
    fn size_threshold_is_the_smallest_exceeding_triangular_number() {
        assert_eq!(smallest_size_exceeding(0), 1);
        assert_eq!(smallest_size_exceeding(30), 8);
        assert_eq!(smallest_size_exceeding(60), 11);
        assert_eq!(smallest_size_exceeding(66), 12);
    }
}
