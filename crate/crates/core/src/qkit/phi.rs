//! Terminating basic hypergeometric series as factored term lists.
//!
//! A series here always has one more upper parameter than lower parameters
//! (beyond the implicit `q`), so successive term ratios carry no residual
//! sign or `q`-power factor. One upper parameter must be `q^(-n*base_exp)`,
//! which terminates the series after `n + 1` terms; every term is produced
//! in factored form and summed through the exact clearing engine.

use crate::laurent::SignedMonomial;

use super::factored::{cleared_sum, PochhammerFactorSet, QkitError};
use crate::laurent::LaurentPolynomial;

/// Specification of a terminating series with upper parameters `upper`,
/// lower parameters `lower` (the implicit `q` excluded), base `q^base_exp`,
/// and argument `argument`:
///
/// `sum_{k=0}^{n} prod_i (u_i; Q)_k / ((Q; Q)_k prod_j (l_j; Q)_k) * x^k`
///
/// with `Q = q^base_exp`, `x = argument`, `n = termination`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricSpec {
    pub upper: Vec<SignedMonomial>,
    pub lower: Vec<SignedMonomial>,
    pub base_exp: i64,
    pub argument: SignedMonomial,
    pub termination: i64,
}

impl HypergeometricSpec {
    pub fn validate(&self) -> Result<(), QkitError> {
        if self.base_exp <= 0 {
            return Err(QkitError::InvalidSeries(format!(
                "base exponent must be positive, got {}",
                self.base_exp
            )));
        }
        if self.termination < 0 {
            return Err(QkitError::InvalidSeries(format!(
                "termination must be nonnegative, got {}",
                self.termination
            )));
        }
        if self.upper.len() != self.lower.len() + 1 {
            return Err(QkitError::InvalidSeries(format!(
                "need exactly one more upper than lower parameter, got {} upper and {} lower",
                self.upper.len(),
                self.lower.len()
            )));
        }
        let stop = SignedMonomial::q_pow(-self.termination * self.base_exp);
        let hits = self.upper.iter().filter(|u| **u == stop).count();
        if hits != 1 {
            return Err(QkitError::InvalidSeries(format!(
                "exactly one upper parameter must equal q^{}, found {}",
                -self.termination * self.base_exp,
                hits
            )));
        }
        Ok(())
    }

    /// Number of terms the series produces.
    pub fn term_count(&self) -> usize {
        self.termination as usize + 1
    }
}

/// Builds the factored terms `t_0 .. t_n` by accumulating successive term
/// ratios: step `k` multiplies `(1 - u_i Q^k)` into the numerator,
/// `(1 - Q^(k+1))` and `(1 - l_j Q^k)` into the denominator, and the
/// argument into the unit.
pub fn phi_terms(spec: &HypergeometricSpec) -> Result<Vec<PochhammerFactorSet>, QkitError> {
    spec.validate()?;
    let b = spec.base_exp;
    let mut terms = Vec::with_capacity(spec.term_count());
    let mut t = PochhammerFactorSet::one();
    terms.push(t.clone());
    for k in 0..spec.termination {
        for u in &spec.upper {
            t.mul_num_atom(u.mul(&SignedMonomial::q_pow(k * b)));
        }
        t.mul_den_atom(SignedMonomial::q_pow((k + 1) * b))?;
        for l in &spec.lower {
            t.mul_den_atom(l.mul(&SignedMonomial::q_pow(k * b)))?;
        }
        t.mul_unit(&spec.argument);
        terms.push(t.clone());
    }
    Ok(terms)
}

/// Evaluates `multiplier * sum_k t_k` exactly as a polynomial.
pub fn phi_sum_cleared(
    spec: &HypergeometricSpec,
    multiplier: &PochhammerFactorSet,
) -> Result<LaurentPolynomial, QkitError> {
    let terms = phi_terms(spec)?;
    cleared_sum(&terms, multiplier)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Variable;

    fn q_pow(e: i64) -> SignedMonomial {
        SignedMonomial::q_pow(e)
    }

    fn var(v: Variable) -> SignedMonomial {
        SignedMonomial::var_pow(v, 1)
    }

    #[test]
    fn validation_rejects_bad_specs() {
        let base = HypergeometricSpec {
            upper: vec![q_pow(-2)],
            lower: vec![],
            base_exp: 1,
            argument: var(Variable::Z),
            termination: 2,
        };
        assert!(base.validate().is_ok());

        let mut wrong_arity = base.clone();
        wrong_arity.lower.push(var(Variable::C));
        assert!(wrong_arity.validate().is_err());

        let mut no_stop = base.clone();
        no_stop.termination = 3;
        assert!(no_stop.validate().is_err());

        let mut negative = base.clone();
        negative.termination = -1;
        negative.upper = vec![q_pow(1)];
        assert!(negative.validate().is_err());
    }

    #[test]
    fn binomial_series_evaluates_to_shifted_product() {
        // sum_k (q^-n;q)_k / (q;q)_k z^k = (z q^-n; q)_n as Laurent
        // polynomials; n = 2 expands to 1 - (q^-2 + q^-1) z + q^-3 z^2.
        let n = 2;
        let spec = HypergeometricSpec {
            upper: vec![q_pow(-n)],
            lower: vec![],
            base_exp: 1,
            argument: var(Variable::Z),
            termination: n,
        };
        let got = phi_sum_cleared(&spec, &PochhammerFactorSet::one()).unwrap();
        let mut expect = PochhammerFactorSet::one();
        expect.mul_pochhammer(&var(Variable::Z).mul(&q_pow(-n)), n, 1);
        assert_eq!(got, expect.expand().unwrap());
    }

    #[test]
    fn q_gauss_sum_at_depth_one() {
        // (c;q)_1 * sum_k (a;q)_k (q^-1;q)_k / ((q;q)_k (c;q)_k) q^k = a - c.
        let spec = HypergeometricSpec {
            upper: vec![var(Variable::A), q_pow(-1)],
            lower: vec![var(Variable::C)],
            base_exp: 1,
            argument: q_pow(1),
            termination: 1,
        };
        let mut mult = PochhammerFactorSet::one();
        mult.mul_pochhammer(&var(Variable::C), 1, 1);
        let got = phi_sum_cleared(&spec, &mult).unwrap();
        let expect = LaurentPolynomial::from_monomial(&var(Variable::A))
            .sub(&LaurentPolynomial::from_monomial(&var(Variable::C)));
        assert_eq!(got, expect);
    }

    #[test]
    fn term_list_matches_direct_construction() {
        let spec = HypergeometricSpec {
            upper: vec![var(Variable::A), q_pow(-2)],
            lower: vec![var(Variable::C)],
            base_exp: 1,
            argument: q_pow(1),
            termination: 2,
        };
        let terms = phi_terms(&spec).unwrap();
        assert_eq!(terms.len(), 3);
        let mut t2 = PochhammerFactorSet::from_unit(q_pow(2));
        t2.mul_pochhammer(&var(Variable::A), 2, 1);
        t2.mul_pochhammer(&q_pow(-2), 2, 1);
        t2.div_pochhammer(&q_pow(1), 2, 1).unwrap();
        t2.div_pochhammer(&var(Variable::C), 2, 1).unwrap();
        assert_eq!(terms[2], t2);
    }
}
