//! Triple Gaussian-binomial sums over the region `i+j <= L, j+k <= L,
//! k+i <= L` paired with their compact left sides: a telescoping quotient
//! sum, its explicit z-expansion, an alternating b-power sum against a
//! double q-factorial sum, and c-deformed and q-shifted variants.
//!
//! Every quotient stated on a left side is computed by exact polynomial
//! division (remainder-checked), never truncated. The c-deformed right
//! sides group the triple region by the index appearing in the extra
//! rational factor and clear that factor group by group, so no rational
//! function ever materializes.

use num_bigint::BigInt;

use crate::laurent::{ExponentVector, LaurentError, LaurentPolynomial, SignedMonomial, Variable};
use crate::qkit::factored::{
    divide_atom_multiset, expand_unit_times_atoms, multiply_by_atoms, AtomMultiset,
};
use crate::qkit::{
    binom2, cleared_sum, pochhammer, q_binomial, triangular, PochhammerFactorSet, QkitError,
};

use super::triple::{triple_sum, triple_sum_grouped, TripleSpec};
use super::{neg_if_odd, req, EngineError, Params, SideEval};

const ID1_TRIPLE: TripleSpec = TripleSpec {
    sign_exp: |_, _, k| k,
    z_exp: |i, j, _| i - j,
    q_shift: |_, _, _| 0,
};

const VAR_A_TRIPLE: TripleSpec = TripleSpec {
    sign_exp: |_, _, k| k,
    z_exp: |i, j, _| i - j,
    q_shift: |_, j, _| -j,
};

const VAR_B_TRIPLE: TripleSpec = TripleSpec {
    sign_exp: |_, _, k| k,
    z_exp: |i, j, _| i - j,
    q_shift: |i, j, _| -i.min(j),
};

// ---------------------------------------------------------------------------
// Base identity and its z-expansion
// ---------------------------------------------------------------------------

/// Left side computed as one exact quotient: the summed numerator
/// `sum_n q^{T_n} (z^-n + z^{n+1})` divided by `1 + z`.
pub fn id1_lhs_by_division(l: i64) -> Result<LaurentPolynomial, LaurentError> {
    let mut numerator = LaurentPolynomial::zero();
    for n in 0..=l {
        let q_part = ExponentVector::var_pow(Variable::Q, triangular(n));
        numerator.add_assign(&LaurentPolynomial::from_terms([
            (q_part.with(Variable::Z, -n), BigInt::from(1)),
            (q_part.with(Variable::Z, n + 1), BigInt::from(1)),
        ]));
    }
    let divisor = LaurentPolynomial::one().add(&LaurentPolynomial::var_pow(Variable::Z, 1));
    numerator.exact_div(&divisor)
}

/// Left side with each quotient replaced by its closed alternating z-sum
/// `sum_{m=-n}^{n} (-1)^{n+m} z^m`.
pub fn id1_lhs_by_expansion(l: i64) -> LaurentPolynomial {
    let mut terms: Vec<(ExponentVector, BigInt)> = Vec::new();
    for n in 0..=l {
        let t_n = triangular(n);
        for m in -n..=n {
            terms.push((
                ExponentVector::var_pow(Variable::Q, t_n).with(Variable::Z, m),
                BigInt::from(if neg_if_odd(n + m) { -1 } else { 1 }),
            ));
        }
    }
    LaurentPolynomial::from_terms(terms)
}

pub(super) fn id1_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let poly = id1_lhs_by_division(l)?;
    Ok(SideEval::new(poly, (l + 1) as u64))
}

pub(super) fn id1_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    Ok(triple_sum(l, &ID1_TRIPLE))
}

pub(super) fn zexp_lhs(p: &Params) -> Result<SideEval, EngineError> {
    id1_lhs(p)
}

pub(super) fn zexp_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let mut terms: Vec<(ExponentVector, BigInt)> = Vec::new();
    let mut summands = 0u64;
    for m in -l..=l {
        for n in 0..=(l - m.abs()) {
            terms.push((
                ExponentVector::var_pow(Variable::Q, triangular(n + m.abs())).with(Variable::Z, m),
                BigInt::from(if neg_if_odd(n) { -1 } else { 1 }),
            ));
            summands += 1;
        }
    }
    Ok(SideEval::new(
        LaurentPolynomial::from_terms(terms),
        summands,
    ))
}

// ---------------------------------------------------------------------------
// Alternating b-power sum against a double q-factorial sum
// ---------------------------------------------------------------------------

fn alternating_b_sum(n: i64) -> LaurentPolynomial {
    LaurentPolynomial::from_terms((0..=n).map(|t| {
        (
            ExponentVector::var_pow(Variable::B, t).with(Variable::Q, binom2(t)),
            BigInt::from(if neg_if_odd(t) { -1 } else { 1 }),
        )
    }))
}

pub(super) fn bn_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "N")?;
    Ok(SideEval::new(alternating_b_sum(n), (n + 1) as u64))
}

/// Double-sum right side grouped by the outer index j. Within a group the
/// k-sum is an honest polynomial (a Gaussian binomial times a shifted
/// b-product); only the q-factorial atoms `(q;q)_j (q;q)_{n-2j}` remain
/// downstairs, and those are cleared against the multiset least common
/// denominator over all groups, with one exact division at the very end.
/// With `c_factors` the group also carries the atoms of
/// `(c;q)_j (cq^{j+1};q)_{n-j}`, the c-deformation already cleared over
/// `(cq;q)_n`.
fn grouped_factorial_rhs(n: i64, c_factors: bool) -> Result<(LaurentPolynomial, u64), QkitError> {
    let b = SignedMonomial::var_pow(Variable::B, 1);
    let c = SignedMonomial::var_pow(Variable::C, 1);
    let mut shared: AtomMultiset = AtomMultiset::new();
    for t in 1..=n {
        shared.insert(SignedMonomial::q_pow(t), if 3 * t <= n { 2 } else { 1 });
    }
    let mut acc = LaurentPolynomial::zero();
    let mut summands = 0u64;
    for j in 0..=n / 2 {
        let mut inner = LaurentPolynomial::zero();
        for k in 0..=(n - j) {
            let shifted = pochhammer(&b.mul(&SignedMonomial::q_pow(n - j - k)), j);
            let mono = SignedMonomial {
                negative: neg_if_odd(k),
                mono: ExponentVector::var_pow(Variable::Q, triangular(k)),
            };
            inner.add_assign(&q_binomial(n - j, k, 1).mul(&shifted).mul_monomial(&mono));
            summands += 1;
        }
        let mut atoms: Vec<SignedMonomial> = Vec::new();
        for i in 0..(n - 2 * j) {
            atoms.push(b.mul(&SignedMonomial::q_pow(j + i)));
        }
        // Complement of this group's own denominator inside the shared one.
        for t in 1..=n {
            let want = if 3 * t <= n { 2 } else { 1 };
            let have = i64::from(t <= j) + i64::from(t <= n - 2 * j);
            for _ in 0..(want - have) {
                atoms.push(SignedMonomial::q_pow(t));
            }
        }
        if c_factors {
            for i in 0..j {
                atoms.push(c.mul(&SignedMonomial::q_pow(i)));
            }
            for i in 0..(n - j) {
                atoms.push(c.mul(&SignedMonomial::q_pow(j + 1 + i)));
            }
        }
        let unit = SignedMonomial {
            negative: false,
            mono: ExponentVector::var_pow(Variable::B, j).with(Variable::Q, j * j),
        };
        acc.add_assign(&multiply_by_atoms(&inner, &atoms).mul_monomial(&unit));
    }
    Ok((divide_atom_multiset(acc, &shared)?, summands))
}

pub(super) fn bn_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "N")?;
    let (poly, summands) = grouped_factorial_rhs(n, false)?;
    Ok(SideEval::new(poly, summands))
}

pub(super) fn bn_c_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "N")?;
    let c = SignedMonomial::var_pow(Variable::C, 1);
    let mut acc = LaurentPolynomial::zero();
    for t in 0..=n {
        let unit = SignedMonomial {
            negative: neg_if_odd(t),
            mono: ExponentVector::var_pow(Variable::B, t).with(Variable::Q, binom2(t)),
        };
        // (cq^{t+1};q)_{n-t} (cq^{n-t+1};q)_t, the term's c-weight cleared
        // over (cq;q)_n.
        let mut atoms: Vec<SignedMonomial> = Vec::new();
        for i in 0..(n - t) {
            atoms.push(c.mul(&SignedMonomial::q_pow(t + 1 + i)));
        }
        for i in 0..t {
            atoms.push(c.mul(&SignedMonomial::q_pow(n - t + 1 + i)));
        }
        acc.add_assign(&expand_unit_times_atoms(&unit, &atoms));
    }
    Ok(SideEval::new(acc, (n + 1) as u64))
}

pub(super) fn bn_c_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "N")?;
    let (poly, summands) = grouped_factorial_rhs(n, true)?;
    Ok(SideEval::new(poly, summands))
}

// ---------------------------------------------------------------------------
// c-deformed double sums against grouped triple sums
// ---------------------------------------------------------------------------

fn cq_atom() -> SignedMonomial {
    SignedMonomial::var_pow(Variable::C, 1).mul(&SignedMonomial::q_pow(1))
}

fn cq_multiplier(l: i64) -> PochhammerFactorSet {
    let mut m = PochhammerFactorSet::one();
    m.mul_pochhammer(&cq_atom(), l, 1);
    m
}

/// Atoms of `(1-c)/(1-c q^g) (cq;q)_L`, the group factor after clearing.
fn deformation_atoms(l: i64, g: i64) -> Vec<SignedMonomial> {
    let c = SignedMonomial::var_pow(Variable::C, 1);
    let mut atoms = Vec::new();
    if g == 0 {
        for t in 1..=l {
            atoms.push(c.mul(&SignedMonomial::q_pow(t)));
        }
    } else {
        atoms.push(c);
        for t in 1..=l {
            if t != g {
                atoms.push(c.mul(&SignedMonomial::q_pow(t)));
            }
        }
    }
    atoms
}

fn grouped_deformed_triple(
    l: i64,
    group_of: fn(i64, i64, i64) -> i64,
) -> Result<SideEval, EngineError> {
    let (groups, summands) = triple_sum_grouped(l, &ID1_TRIPLE, group_of);
    let mut acc = LaurentPolynomial::zero();
    for (g, poly) in &groups {
        acc.add_assign(&multiply_by_atoms(poly, &deformation_atoms(l, *g)));
    }
    Ok(SideEval::new(acc, summands))
}

pub(super) fn id1b_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let cq = cq_atom();
    let mut terms: Vec<PochhammerFactorSet> = Vec::new();
    for n in -l..=l {
        for m in -l..=n {
            let unit = SignedMonomial {
                negative: neg_if_odd(n + m),
                mono: ExponentVector::var_pow(Variable::Q, triangular(n)).with(Variable::Z, m),
            };
            let mut t = PochhammerFactorSet::from_unit(unit);
            t.mul_pochhammer(&cq, l - m, 1);
            t.div_pochhammer(&cq, l - n, 1)?;
            t.div_pochhammer(&cq, n - m, 1)?;
            terms.push(t);
        }
    }
    let summands = terms.len() as u64;
    let poly = cleared_sum(&terms, &cq_multiplier(l))?;
    Ok(SideEval::new(poly, summands))
}

pub(super) fn id1b_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    grouped_deformed_triple(l, |_, j, _| j)
}

pub(super) fn id1c_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let cq = cq_atom();
    let mut terms: Vec<PochhammerFactorSet> = Vec::new();
    for n in 0..=l {
        for m in -n..=n {
            let unit = SignedMonomial {
                negative: neg_if_odd(n + m),
                mono: ExponentVector::var_pow(Variable::Q, triangular(n)).with(Variable::Z, m),
            };
            let mut t = PochhammerFactorSet::from_unit(unit);
            t.mul_pochhammer(&cq, l - m.abs(), 1);
            t.div_pochhammer(&cq, l - n, 1)?;
            t.div_pochhammer(&cq, n - m.abs(), 1)?;
            terms.push(t);
        }
    }
    let summands = terms.len() as u64;
    let poly = cleared_sum(&terms, &cq_multiplier(l))?;
    Ok(SideEval::new(poly, summands))
}

pub(super) fn id1c_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    grouped_deformed_triple(l, |i, j, _| i.min(j))
}

// ---------------------------------------------------------------------------
// q-shifted quotient variants
// ---------------------------------------------------------------------------

pub(super) fn var_a_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let mut acc = LaurentPolynomial::zero();
    for n in 0..=2 * l {
        let numerator = LaurentPolynomial::from_terms([
            (
                ExponentVector::var_pow(Variable::Z, -l).with(Variable::Q, n * (2 * l - n + 1)),
                BigInt::from(if neg_if_odd(n) { -1 } else { 1 }),
            ),
            (
                ExponentVector::var_pow(Variable::Z, l - n + 1),
                BigInt::from(1),
            ),
        ]);
        let divisor = LaurentPolynomial::from_terms([
            (ExponentVector::var_pow(Variable::Q, n), BigInt::from(1)),
            (ExponentVector::var_pow(Variable::Z, 1), BigInt::from(1)),
        ]);
        let quotient = numerator.exact_div(&divisor)?;
        acc.add_assign(&quotient.mul_monomial(&SignedMonomial::q_pow(triangular(l - n))));
    }
    Ok(SideEval::new(acc, (2 * l + 1) as u64))
}

pub(super) fn var_a_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    Ok(triple_sum(l, &VAR_A_TRIPLE))
}

pub(super) fn var_b_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    let mut acc = LaurentPolynomial::zero();
    for n in 0..=l {
        let first_num = LaurentPolynomial::from_terms([
            (
                ExponentVector::var_pow(Variable::Q, (n + 1) * (l - n)),
                BigInt::from(if neg_if_odd(n) { -1 } else { 1 }),
            ),
            (ExponentVector::var_pow(Variable::Z, n + 1), BigInt::from(1)),
        ]);
        let first_div = LaurentPolynomial::from_terms([
            (ExponentVector::var_pow(Variable::Q, l - n), BigInt::from(1)),
            (ExponentVector::var_pow(Variable::Z, 1), BigInt::from(1)),
        ]);
        // Sign (-1)^{n+1}: at n = 0 the two numerator terms cancel and the
        // quotient is zero.
        let second_num = LaurentPolynomial::from_terms([
            (
                ExponentVector::var_pow(Variable::Q, n * (l - n)),
                BigInt::from(if neg_if_odd(n) { 1 } else { -1 }),
            ),
            (ExponentVector::var_pow(Variable::Z, -n), BigInt::from(1)),
        ]);
        let second_div = LaurentPolynomial::from_terms([
            (ExponentVector::unit(), BigInt::from(1)),
            (
                ExponentVector::var_pow(Variable::Z, 1).with(Variable::Q, l - n),
                BigInt::from(1),
            ),
        ]);
        let part = first_num
            .exact_div(&first_div)?
            .add(&second_num.exact_div(&second_div)?);
        acc.add_assign(&part.mul_monomial(&SignedMonomial::q_pow(triangular(n))));
    }
    Ok(SideEval::new(acc, (l + 1) as u64))
}

pub(super) fn var_b_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let l = req(p, "L")?;
    Ok(triple_sum(l, &VAR_B_TRIPLE))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::params;

    #[test]
    fn division_and_expansion_left_sides_agree() {
        for l in 0..=8 {
            assert_eq!(id1_lhs_by_division(l).unwrap(), id1_lhs_by_expansion(l));
        }
    }

    #[test]
    fn small_left_side_prints_canonically() {
        assert_eq!(
            id1_lhs_by_division(1).unwrap().to_string(),
            "1 + 1*q*z^-1 - 1*q + 1*q*z"
        );
    }

    #[test]
    fn triple_sum_matches_quotient_left_side() {
        for l in 0..=6 {
            let p = params(&[("L", l)]);
            assert_eq!(id1_lhs(&p).unwrap().poly, id1_rhs(&p).unwrap().poly);
        }
    }

    #[test]
    fn z_expanded_right_side_matches() {
        for l in 0..=8 {
            let p = params(&[("L", l)]);
            let rhs = zexp_rhs(&p).unwrap();
            assert_eq!(zexp_lhs(&p).unwrap().poly, rhs.poly);
            assert_eq!(rhs.summands, ((l + 1) * (l + 1)) as u64);
        }
    }

    #[test]
    fn grouped_factorial_sum_matches_literal_clearing() {
        let q = SignedMonomial::q_pow(1);
        let b = SignedMonomial::var_pow(Variable::B, 1);
        for n in 0..=6 {
            let mut terms: Vec<PochhammerFactorSet> = Vec::new();
            for j in 0..=n / 2 {
                for k in 0..=(n - j) {
                    let unit = SignedMonomial {
                        negative: neg_if_odd(k),
                        mono: ExponentVector::var_pow(Variable::B, j)
                            .with(Variable::Q, j * j + triangular(k)),
                    };
                    let mut t = PochhammerFactorSet::from_unit(unit);
                    t.mul_pochhammer(&q, n - j, 1);
                    t.mul_pochhammer(&b, n - j, 1);
                    t.mul_pochhammer(&b, n - k, 1);
                    t.div_pochhammer(&q, j, 1).unwrap();
                    t.div_pochhammer(&b, j, 1).unwrap();
                    t.div_pochhammer(&q, n - j - k, 1).unwrap();
                    t.div_pochhammer(&b, n - j - k, 1).unwrap();
                    t.div_pochhammer(&q, k, 1).unwrap();
                    t.div_pochhammer(&q, n - 2 * j, 1).unwrap();
                    terms.push(t);
                }
            }
            let literal = cleared_sum(&terms, &PochhammerFactorSet::one()).unwrap();
            let (grouped, _) = grouped_factorial_rhs(n, false).unwrap();
            assert_eq!(grouped, literal);
            assert_eq!(grouped, alternating_b_sum(n));
        }
    }

    #[test]
    fn c_deformed_sides_agree_small() {
        for n in 0..=5 {
            let p = params(&[("N", n)]);
            assert_eq!(bn_c_lhs(&p).unwrap().poly, bn_c_rhs(&p).unwrap().poly);
        }
        for l in 0..=4 {
            let p = params(&[("L", l)]);
            assert_eq!(id1b_lhs(&p).unwrap().poly, id1b_rhs(&p).unwrap().poly);
            assert_eq!(id1c_lhs(&p).unwrap().poly, id1c_rhs(&p).unwrap().poly);
        }
    }

    #[test]
    fn shifted_variant_sides_agree_small() {
        for l in 0..=5 {
            let p = params(&[("L", l)]);
            assert_eq!(var_a_lhs(&p).unwrap().poly, var_a_rhs(&p).unwrap().poly);
            assert_eq!(var_b_lhs(&p).unwrap().poly, var_b_rhs(&p).unwrap().poly);
        }
    }
}
