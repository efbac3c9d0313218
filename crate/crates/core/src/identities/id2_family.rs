//! Even-z-power double sums paired with the triple Gaussian-binomial sum
//! carrying `z^{i+j}` and sign `(-1)^j`, plus the telescoped single sum,
//! the coefficient-of-`z^{2j}` lemma, and the stepped-product form.

use crate::laurent::{ExponentVector, LaurentError, LaurentPolynomial, SignedMonomial, Variable};
use crate::qkit::{binom2, pochhammer, pochhammer_step, q_binomial, triangular};

use super::triple::{triple_sum, triple_summand, TripleSpec};
use super::{neg_if_odd, req, EngineError, Params, SideEval};

const ID2_TRIPLE: TripleSpec = TripleSpec {
    sign_exp: |_, j, _| j,
    z_exp: |i, j, _| i + j,
    q_shift: |_, _, _| 0,
};

pub(super) fn id2_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let mut acc = LaurentPolynomial::zero();
    let mut summands = 0u64;
    for j in 0..=l / 2 {
        for i in j..=(l - j) {
            let mono = SignedMonomial {
                negative: neg_if_odd(j),
                mono: ExponentVector::var_pow(Variable::Q, triangular(i) + triangular(j))
                    .with(Variable::Z, 2 * j),
            };
            acc.add_assign(
                &q_binomial(l - j, i, 1)
                    .mul(&q_binomial(i, j, 1))
                    .mul_monomial(&mono),
            );
            summands += 1;
        }
    }
    Ok(SideEval::new(acc, summands))
}

pub(super) fn id2_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    Ok(triple_sum(l, &ID2_TRIPLE))
}

pub(super) fn lhs2_lhs(p: &Params) -> Result<SideEval, EngineError> {
    id2_lhs(p)
}

/// The inner i-sum telescoped into `(-q^{j+1};q)_{L-2j}`.
pub(super) fn lhs2_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let mut acc = LaurentPolynomial::zero();
    for j in 0..=l / 2 {
        let base = SignedMonomial {
            negative: true,
            mono: ExponentVector::var_pow(Variable::Q, j + 1),
        };
        let mono = SignedMonomial {
            negative: neg_if_odd(j),
            mono: ExponentVector::var_pow(Variable::Q, j * (j + 1)).with(Variable::Z, 2 * j),
        };
        acc.add_assign(
            &q_binomial(l - j, j, 1)
                .mul(&pochhammer(&base, l - 2 * j))
                .mul_monomial(&mono),
        );
    }
    Ok(SideEval::new(acc, (l / 2 + 1) as u64))
}

/// Coefficient of `z^{2j}` in the triple sum, written as a z-free double
/// sum; both sides are normalized by `(-q;q)_{L-2j}`.
pub(super) fn z2j_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let j = req(p, "j")?;
    let mut acc = LaurentPolynomial::zero();
    let mut summands = 0u64;
    for i in 0..=2 * j {
        for k in 0..=(l + i - 2 * j).min(l - i) {
            let d = i - j;
            let mono = SignedMonomial {
                negative: neg_if_odd(d),
                mono: ExponentVector::var_pow(Variable::Q, d * d + triangular(k)),
            };
            acc.add_assign(
                &q_binomial(l - i, 2 * j - i, 1)
                    .mul(&q_binomial(l + i - 2 * j, k, 1))
                    .mul(&q_binomial(l - k, i, 1))
                    .mul_monomial(&mono),
            );
            summands += 1;
        }
    }
    Ok(SideEval::new(acc, summands))
}

pub(super) fn z2j_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let j = req(p, "j")?;
    let neg_q = SignedMonomial {
        negative: true,
        mono: ExponentVector::var_pow(Variable::Q, 1),
    };
    let poly = pochhammer(&neg_q, l - 2 * j).mul(&q_binomial(l - j, j, 2));
    Ok(SideEval::new(poly, 1))
}

pub(super) fn id2b_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let mut acc = LaurentPolynomial::zero();
    for j in 0..=l / 2 {
        let base = SignedMonomial::var_pow(Variable::Z, 2).mul(&SignedMonomial::q_pow(2));
        let mono = SignedMonomial::q_pow(binom2(l - 2 * j));
        acc.add_assign(
            &pochhammer_step(&base, j, 2)
                .mul(&q_binomial(l + 1, 2 * j + 1, 1))
                .mul_monomial(&mono),
        );
    }
    Ok(SideEval::new(acc, (l / 2 + 1) as u64))
}

pub(super) fn id2b_rhs(p: &Params) -> Result<SideEval, EngineError> {
    id2_rhs(p)
}

/// One raw summand of the `z^{i+j}` triple sum, exposed for the termwise
/// swap-antisymmetry check `S_{i,j,k} = (-1)^{i+j} S_{j,i,k}`.
pub fn id2_rhs_summand(l: i64, i: i64, j: i64, k: i64) -> LaurentPolynomial {
    triple_summand(l, i, j, k, &ID2_TRIPLE)
}

/// Single-sum form whose terms are exact quotients
/// `(q^{2k+2};q^2)_{L-2k} / (q;q)_{L-2k}` (remainder-checked divisions).
pub fn id2b_single_sum(l: i64) -> Result<LaurentPolynomial, LaurentError> {
    let mut acc = LaurentPolynomial::zero();
    for k in 0..=l / 2 {
        let num = pochhammer_step(&SignedMonomial::q_pow(2 * k + 2), l - 2 * k, 2);
        let den = pochhammer(&SignedMonomial::q_pow(1), l - 2 * k);
        let mono = SignedMonomial {
            negative: neg_if_odd(k),
            mono: ExponentVector::var_pow(Variable::Q, k * (k + 1)).with(Variable::Z, 2 * k),
        };
        acc.add_assign(&num.exact_div(&den)?.mul_monomial(&mono));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::params;

    #[test]
    fn double_sum_matches_triple_sum_small() {
        for l in 0..=6 {
            let p = params(&[("L", l)]);
            assert_eq!(id2_lhs(&p).unwrap().poly, id2_rhs(&p).unwrap().poly);
        }
    }

    #[test]
    fn telescoped_inner_sum_matches() {
        for l in 0..=8 {
            let p = params(&[("L", l)]);
            assert_eq!(lhs2_lhs(&p).unwrap().poly, lhs2_rhs(&p).unwrap().poly);
        }
    }

    #[test]
    fn even_z_coefficient_sides_agree() {
        for l in 0..=8 {
            for j in 0..=l / 2 {
                let p = params(&[("L", l), ("j", j)]);
                assert_eq!(z2j_lhs(&p).unwrap().poly, z2j_rhs(&p).unwrap().poly);
            }
        }
    }

    #[test]
    fn stepped_product_form_matches_triple_sum() {
        for l in 0..=6 {
            let p = params(&[("L", l)]);
            assert_eq!(id2b_lhs(&p).unwrap().poly, id2b_rhs(&p).unwrap().poly);
        }
    }

    #[test]
    fn single_sum_form_matches_double_sum() {
        for l in 0..=8 {
            let p = params(&[("L", l)]);
            assert_eq!(id2b_single_sum(l).unwrap(), id2_lhs(&p).unwrap().poly);
        }
    }

    #[test]
    fn summand_swap_antisymmetry_spot() {
        for l in 0..=5i64 {
            for i in 0..=l {
                for j in 0..=(l - i) {
                    for k in 0..=(l - i).min(l - j) {
                        let direct = id2_rhs_summand(l, i, j, k);
                        let swapped = id2_rhs_summand(l, j, i, k);
                        let expected = if (i + j) % 2 == 0 {
                            swapped
                        } else {
                            swapped.neg()
                        };
                        assert_eq!(direct, expected);
                    }
                }
            }
        }
    }
}
