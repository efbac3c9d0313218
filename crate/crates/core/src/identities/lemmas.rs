//! Terminating basic hypergeometric summation lemmas. Each left side is a
//! terminating series evaluated through the exact clearing engine after
//! multiplying by the stated normalizer; each right side is the closed
//! product form under the same normalizer, expanded as a polynomial.

use crate::laurent::{ExponentVector, LaurentPolynomial, SignedMonomial, Variable};
use crate::qkit::{
    binom2, cleared_sum, phi_sum_cleared, pochhammer, pochhammer_step, triangular,
    HypergeometricSpec, PochhammerFactorSet,
};

use super::{neg_if_odd, req, EngineError, Params, SideEval};

fn var(v: Variable) -> SignedMonomial {
    SignedMonomial::var_pow(v, 1)
}

// ---------------------------------------------------------------------------
// phi(a, q^-n; a q^-m; q, 1), argument 1, valid for 0 <= m <= n
// ---------------------------------------------------------------------------

pub(super) fn z1_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let m = req(p, "m")?;
    let a = var(Variable::A);
    let lower = a.mul(&SignedMonomial::q_pow(-m));
    let spec = HypergeometricSpec {
        upper: vec![a, SignedMonomial::q_pow(-n)],
        lower: vec![lower],
        base_exp: 1,
        argument: SignedMonomial::one(),
        termination: n,
    };
    let mut multiplier = PochhammerFactorSet::one();
    multiplier.mul_pochhammer(&lower, n, 1);
    let poly = phi_sum_cleared(&spec, &multiplier)?;
    Ok(SideEval::new(poly, spec.term_count() as u64))
}

pub(super) fn z1_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let m = req(p, "m")?;
    let poly = pochhammer(&SignedMonomial::q_pow(-n), n).mul(&pochhammer(&var(Variable::A), n - m));
    Ok(SideEval::new(poly, 1))
}

// ---------------------------------------------------------------------------
// phi(q^-n; -; q, z) = (z q^-n;q)_n
// ---------------------------------------------------------------------------

pub(super) fn qbthm_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let spec = HypergeometricSpec {
        upper: vec![SignedMonomial::q_pow(-n)],
        lower: vec![],
        base_exp: 1,
        argument: var(Variable::Z),
        termination: n,
    };
    let poly = phi_sum_cleared(&spec, &PochhammerFactorSet::one())?;
    Ok(SideEval::new(poly, spec.term_count() as u64))
}

pub(super) fn qbthm_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let base = var(Variable::Z).mul(&SignedMonomial::q_pow(-n));
    Ok(SideEval::new(pochhammer(&base, n), 1))
}

// ---------------------------------------------------------------------------
// phi(a, q^-n; c; q, q) = a^n (c/a;q)_n / (c;q)_n
// ---------------------------------------------------------------------------

pub(super) fn qcv_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let c = var(Variable::C);
    let spec = HypergeometricSpec {
        upper: vec![var(Variable::A), SignedMonomial::q_pow(-n)],
        lower: vec![c],
        base_exp: 1,
        argument: SignedMonomial::q_pow(1),
        termination: n,
    };
    let mut multiplier = PochhammerFactorSet::one();
    multiplier.mul_pochhammer(&c, n, 1);
    let poly = phi_sum_cleared(&spec, &multiplier)?;
    Ok(SideEval::new(poly, spec.term_count() as u64))
}

pub(super) fn qcv_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let c_over_a = var(Variable::C).mul(&SignedMonomial::var_pow(Variable::A, -1));
    let poly = pochhammer(&c_over_a, n).mul_monomial(&SignedMonomial::var_pow(Variable::A, n));
    Ok(SideEval::new(poly, 1))
}

// ---------------------------------------------------------------------------
// phi(a, b, q^-n; c, a b q^{1-n}/c; q, q) = (c/a;q)_n (c/b;q)_n /
// ((c;q)_n (c/(ab);q)_n)
// ---------------------------------------------------------------------------

pub(super) fn saalschutz_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let c = var(Variable::C);
    let balancer = var(Variable::A)
        .mul(&var(Variable::B))
        .mul(&SignedMonomial::q_pow(1 - n))
        .mul(&SignedMonomial::var_pow(Variable::C, -1));
    let spec = HypergeometricSpec {
        upper: vec![
            var(Variable::A),
            var(Variable::B),
            SignedMonomial::q_pow(-n),
        ],
        lower: vec![c, balancer],
        base_exp: 1,
        argument: SignedMonomial::q_pow(1),
        termination: n,
    };
    let mut multiplier = PochhammerFactorSet::one();
    multiplier.mul_pochhammer(&c, n, 1);
    multiplier.mul_pochhammer(&balancer, n, 1);
    let poly = phi_sum_cleared(&spec, &multiplier)?;
    Ok(SideEval::new(poly, spec.term_count() as u64))
}

pub(super) fn saalschutz_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let c_over_a = var(Variable::C).mul(&SignedMonomial::var_pow(Variable::A, -1));
    let c_over_b = var(Variable::C).mul(&SignedMonomial::var_pow(Variable::B, -1));
    // (a b q^{1-n}/c;q)_n / (c/(ab);q)_n collapses to the signed monomial
    // (-ab/c)^n q^{-C(n,2)} under the chosen normalizer.
    let unit = SignedMonomial {
        negative: neg_if_odd(n),
        mono: ExponentVector::var_pow(Variable::A, n)
            .with(Variable::B, n)
            .with(Variable::C, -n)
            .with(Variable::Q, -binom2(n)),
    };
    let poly = pochhammer(&c_over_a, n)
        .mul(&pochhammer(&c_over_b, n))
        .mul_monomial(&unit);
    Ok(SideEval::new(poly, 1))
}

// ---------------------------------------------------------------------------
// sum_{i=0}^{2n} q^{T_i} (q^{-2n};q)_i / (q;q)_i = (-1)^n q^{-n^2} (q;q^2)_n
// ---------------------------------------------------------------------------

pub(super) fn ex26_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let base = SignedMonomial::q_pow(-2 * n);
    let q = SignedMonomial::q_pow(1);
    let mut terms: Vec<PochhammerFactorSet> = Vec::new();
    for i in 0..=2 * n {
        let mut t = PochhammerFactorSet::from_unit(SignedMonomial::q_pow(triangular(i)));
        t.mul_pochhammer(&base, i, 1);
        t.div_pochhammer(&q, i, 1)?;
        terms.push(t);
    }
    let multiplier = PochhammerFactorSet::from_unit(SignedMonomial::q_pow(n * n));
    let summands = terms.len() as u64;
    let poly = cleared_sum(&terms, &multiplier)?;
    Ok(SideEval::new(poly, summands))
}

pub(super) fn ex26_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let mut poly = pochhammer_step(&SignedMonomial::q_pow(1), n, 2);
    if neg_if_odd(n) {
        poly = poly.neg();
    }
    Ok(SideEval::new(poly, 1))
}

// ---------------------------------------------------------------------------
// phi(q^-n, b, c, -q^{1-n}/(bc); q^{1-n}/b, q^{1-n}/c, -bc; q, q)
// ---------------------------------------------------------------------------

pub(super) fn ex26_full_lhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    let b = var(Variable::B);
    let c = var(Variable::C);
    let bc_inv =
        SignedMonomial::var_pow(Variable::B, -1).mul(&SignedMonomial::var_pow(Variable::C, -1));
    let lower_b = SignedMonomial::q_pow(1 - n).mul(&SignedMonomial::var_pow(Variable::B, -1));
    let lower_c = SignedMonomial::q_pow(1 - n).mul(&SignedMonomial::var_pow(Variable::C, -1));
    let lower_bc = b.mul(&c).neg();
    let spec = HypergeometricSpec {
        upper: vec![
            SignedMonomial::q_pow(-n),
            b,
            c,
            SignedMonomial::q_pow(1 - n).mul(&bc_inv).neg(),
        ],
        lower: vec![lower_b, lower_c, lower_bc],
        base_exp: 1,
        argument: SignedMonomial::q_pow(1),
        termination: n,
    };
    let mut multiplier = PochhammerFactorSet::from_unit(SignedMonomial::q_pow(n * (n - 1)));
    multiplier.mul_pochhammer(&lower_b, n, 1);
    multiplier.mul_pochhammer(&lower_c, n, 1);
    multiplier.mul_pochhammer(&lower_bc, n, 1);
    let poly = phi_sum_cleared(&spec, &multiplier)?;
    Ok(SideEval::new(poly, spec.term_count() as u64))
}

pub(super) fn ex26_full_rhs(p: &Params) -> Result<SideEval, EngineError> {
    let n = req(p, "n")?;
    if n % 2 == 1 {
        return Ok(SideEval::new(LaurentPolynomial::zero(), 1));
    }
    let m = n / 2;
    let b_sq = SignedMonomial::var_pow(Variable::B, 2);
    let c_sq = SignedMonomial::var_pow(Variable::C, 2);
    let bbcc = b_sq.mul(&c_sq).mul(&SignedMonomial::q_pow(n));
    let unit = SignedMonomial {
        negative: false,
        mono: ExponentVector::var_pow(Variable::B, -n).with(Variable::C, -n),
    };
    let poly = pochhammer_step(&SignedMonomial::q_pow(1), m, 2)
        .mul(&pochhammer_step(&b_sq, m, 2))
        .mul(&pochhammer_step(&c_sq, m, 2))
        .mul(&pochhammer_step(&bbcc, m, 2))
        .mul_monomial(&unit);
    Ok(SideEval::new(poly, 1))
}
