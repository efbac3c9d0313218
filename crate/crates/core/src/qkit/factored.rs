//! Products and ratios of Pochhammer atoms, kept in factored form, and the
//! denominator-clearing engine for sums of such ratios.
//!
//! An atom is the binomial `1 - s*m` for a signed monomial `s*m`. A factor
//! set is `unit * prod(numerator atoms) / prod(denominator atoms)` with a
//! zero flag for a degenerate `(1 - 1)` numerator atom. Ratios cancel only
//! on exact `(sign, monomial)` atom equality; no rewriting such as
//! `(1 - m) = -m*(1 - 1/m)` is ever applied, so callers must arrange their
//! multipliers accordingly.
//!
//! Sums of ratios rarely clear term by term: the engine instead multiplies
//! every term up to the multiset least common denominator, sums polynomials,
//! and performs one exact division per denominator atom at the end. A
//! nonzero remainder anywhere surfaces as [`QkitError::ResidualDenominator`]
//! rather than being truncated.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::dense::{Bounds, DensePoly};
use crate::laurent::{LaurentPolynomial, SignedMonomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QkitError {
    /// A denominator atom degenerated to `(1 - 1) = 0`.
    #[error("denominator contains a vanishing atom (1 - 1)")]
    ZeroDenominatorAtom,
    /// A sum failed to clear its common denominator exactly; this signals a
    /// wrong normalizer or a transcription bug, never a rounding issue.
    #[error("sum does not clear its denominator: {0}")]
    ResidualDenominator(String),
    /// A hypergeometric series specification violates its invariants.
    #[error("invalid series specification: {0}")]
    InvalidSeries(String),
}

/// Multiset of atoms: atom -> multiplicity (always >= 1).
pub type AtomMultiset = BTreeMap<SignedMonomial, u32>;

fn multiset_insert(set: &mut AtomMultiset, atom: SignedMonomial, count: u32) {
    if count > 0 {
        *set.entry(atom).or_insert(0) += count;
    }
}

/// `unit * prod(1 - s*m over numerator) / prod(1 - s*m over denominator)`,
/// with an explicit zero flag for a vanishing numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PochhammerFactorSet {
    unit: SignedMonomial,
    zero: bool,
    numerator: AtomMultiset,
    denominator: AtomMultiset,
}

impl Default for PochhammerFactorSet {
    fn default() -> Self {
        Self::one()
    }
}

impl PochhammerFactorSet {
    pub fn one() -> Self {
        PochhammerFactorSet {
            unit: SignedMonomial::one(),
            zero: false,
            numerator: AtomMultiset::new(),
            denominator: AtomMultiset::new(),
        }
    }

    pub fn from_unit(unit: SignedMonomial) -> Self {
        PochhammerFactorSet {
            unit,
            ..Self::one()
        }
    }

    /// True if a numerator atom vanished; the set represents zero.
    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn unit(&self) -> &SignedMonomial {
        &self.unit
    }

    pub fn numerator(&self) -> &AtomMultiset {
        &self.numerator
    }

    pub fn denominator(&self) -> &AtomMultiset {
        &self.denominator
    }

    pub fn mul_unit(&mut self, sm: &SignedMonomial) {
        self.unit = self.unit.mul(sm);
    }

    /// Multiplies by the atom `1 - sm`. The degenerate `sm = +1` makes the
    /// whole set zero, recorded explicitly.
    pub fn mul_num_atom(&mut self, sm: SignedMonomial) {
        if sm.is_one() {
            self.zero = true;
        } else {
            multiset_insert(&mut self.numerator, sm, 1);
        }
    }

    /// Divides by the atom `1 - sm`; dividing by the vanishing atom is an
    /// error, never a silent degeneracy.
    pub fn mul_den_atom(&mut self, sm: SignedMonomial) -> Result<(), QkitError> {
        if sm.is_one() {
            return Err(QkitError::ZeroDenominatorAtom);
        }
        multiset_insert(&mut self.denominator, sm, 1);
        Ok(())
    }

    /// Multiplies by `(base; q^step)_n` in the numerator.
    pub fn mul_pochhammer(&mut self, base: &SignedMonomial, n: i64, step: i64) {
        assert!(n >= 0);
        for k in 0..n {
            self.mul_num_atom(base.mul(&SignedMonomial::q_pow(k * step)));
        }
    }

    /// Divides by `(base; q^step)_n`.
    pub fn div_pochhammer(
        &mut self,
        base: &SignedMonomial,
        n: i64,
        step: i64,
    ) -> Result<(), QkitError> {
        assert!(n >= 0);
        for k in 0..n {
            self.mul_den_atom(base.mul(&SignedMonomial::q_pow(k * step)))?;
        }
        Ok(())
    }

    pub fn mul_assign(&mut self, other: &PochhammerFactorSet) {
        self.unit = self.unit.mul(&other.unit);
        self.zero |= other.zero;
        for (atom, count) in &other.numerator {
            multiset_insert(&mut self.numerator, *atom, *count);
        }
        for (atom, count) in &other.denominator {
            multiset_insert(&mut self.denominator, *atom, *count);
        }
    }

    /// Cancels atoms equal in (sign, monomial) between numerator and
    /// denominator; afterwards no atom appears on both sides.
    pub fn simplify(&mut self) {
        let mut cancelled: Vec<(SignedMonomial, u32)> = Vec::new();
        for (atom, num_count) in &self.numerator {
            if let Some(den_count) = self.denominator.get(atom) {
                cancelled.push((*atom, (*num_count).min(*den_count)));
            }
        }
        for (atom, count) in cancelled {
            decrease(&mut self.numerator, &atom, count);
            decrease(&mut self.denominator, &atom, count);
        }
    }

    /// Expands to a polynomial. Defined only when the denominator is empty
    /// after cancellation; a leftover denominator atom is an error.
    pub fn expand(&self) -> Result<LaurentPolynomial, QkitError> {
        let mut s = self.clone();
        s.simplify();
        if s.zero {
            return Ok(LaurentPolynomial::zero());
        }
        if !s.denominator.is_empty() {
            return Err(QkitError::ResidualDenominator(format!(
                "{} denominator atom(s) remain after cancellation",
                s.denominator.values().map(|c| *c as u64).sum::<u64>()
            )));
        }
        Ok(expand_atom_multiset(&s.unit, &s.numerator))
    }
}

fn decrease(set: &mut AtomMultiset, atom: &SignedMonomial, count: u32) {
    if count == 0 {
        return;
    }
    let entry = set.get_mut(atom).expect("atom present");
    *entry -= count;
    if *entry == 0 {
        set.remove(atom);
    }
}

/// Cancellation as a pure function (the multiset-cancelled copy).
pub fn simplify_ratio(r: &PochhammerFactorSet) -> PochhammerFactorSet {
    let mut s = r.clone();
    s.simplify();
    s
}

/// The polynomial `1 - sm`.
pub fn atom_polynomial(sm: &SignedMonomial) -> LaurentPolynomial {
    LaurentPolynomial::one().sub(&LaurentPolynomial::from_monomial(sm))
}

// ---------------------------------------------------------------------------
// Expansion and exact division of atom products
// ---------------------------------------------------------------------------

/// Expands `unit * prod(1 - sm)` over a slice of atoms (with repeats).
pub(crate) fn expand_unit_times_atoms(
    unit: &SignedMonomial,
    atoms: &[SignedMonomial],
) -> LaurentPolynomial {
    let mut bounds = Bounds::point();
    bounds.translate(&unit.mono);
    let mut scalar = BigInt::one();
    let mut scans: Vec<&SignedMonomial> = Vec::with_capacity(atoms.len());
    for sm in atoms {
        if sm.is_one() {
            return LaurentPolynomial::zero();
        }
        if sm.mono.is_unit() {
            // (1 - (-1)) = 2: a constant, not a scan.
            scalar *= 2;
        } else {
            bounds.widen_binomial(sm);
            scans.push(sm);
        }
    }
    let start = LaurentPolynomial::from_monomial(unit);
    let mut result = if bounds.fits_dense() {
        let mut dp = DensePoly::from_sparse(&start, &bounds);
        for sm in scans {
            dp.mul_binomial(sm);
        }
        dp.into_sparse()
    } else {
        let mut p = start;
        for sm in scans {
            p = p.mul(&atom_polynomial(sm));
        }
        p
    };
    if !scalar.is_one() {
        result = result.scale(&scalar);
    }
    result
}

/// Multiplies a polynomial by `prod(1 - sm)` over a list of binomial atoms,
/// using a dense scan when the product bounds are small enough.
pub(crate) fn multiply_by_atoms(
    p: &LaurentPolynomial,
    atoms: &[SignedMonomial],
) -> LaurentPolynomial {
    let Some(mut bounds) = Bounds::of(p) else {
        return LaurentPolynomial::zero();
    };
    let mut scalar = BigInt::one();
    let mut scans: Vec<&SignedMonomial> = Vec::with_capacity(atoms.len());
    for sm in atoms {
        if sm.is_one() {
            return LaurentPolynomial::zero();
        }
        if sm.mono.is_unit() {
            scalar *= 2;
        } else {
            bounds.widen_binomial(sm);
            scans.push(sm);
        }
    }
    let mut result = if bounds.fits_dense() {
        let mut dp = DensePoly::from_sparse(p, &bounds);
        for sm in scans {
            dp.mul_binomial(sm);
        }
        dp.into_sparse()
    } else {
        let mut acc = p.clone();
        for sm in scans {
            acc = acc.mul(&atom_polynomial(sm));
        }
        acc
    };
    if !scalar.is_one() {
        result = result.scale(&scalar);
    }
    result
}

fn expand_atom_multiset(unit: &SignedMonomial, atoms: &AtomMultiset) -> LaurentPolynomial {
    let flat: Vec<SignedMonomial> = atoms
        .iter()
        .flat_map(|(atom, count)| std::iter::repeat_n(*atom, *count as usize))
        .collect();
    expand_unit_times_atoms(unit, &flat)
}

/// Divides `p` by `prod(1 - sm)` over an atom multiset; every division must
/// be exact.
pub(crate) fn divide_atom_multiset(
    p: LaurentPolynomial,
    atoms: &AtomMultiset,
) -> Result<LaurentPolynomial, QkitError> {
    if p.is_zero() {
        return Ok(p);
    }
    let mut constant = BigInt::one();
    let mut scans: Vec<SignedMonomial> = Vec::new();
    for (atom, count) in atoms {
        if atom.is_one() {
            return Err(QkitError::ZeroDenominatorAtom);
        }
        if atom.mono.is_unit() {
            for _ in 0..*count {
                constant *= 2;
            }
        } else {
            for _ in 0..*count {
                scans.push(*atom);
            }
        }
    }
    let bounds = Bounds::of(&p).expect("nonzero polynomial");
    let residual =
        |err: crate::laurent::LaurentError| QkitError::ResidualDenominator(err.to_string());
    let mut result = if bounds.fits_dense() {
        let mut dp = DensePoly::from_sparse(&p, &bounds);
        for sm in &scans {
            dp.div_binomial_exact(sm).map_err(residual)?;
        }
        dp.into_sparse()
    } else {
        let mut acc = p;
        for sm in &scans {
            acc = acc.exact_div(&atom_polynomial(sm)).map_err(residual)?;
        }
        acc
    };
    if !constant.is_one() {
        result = result
            .exact_div(&LaurentPolynomial::constant(constant))
            .map_err(residual)?;
    }
    Ok(result)
}

// ---------------------------------------------------------------------------
// Denominator-clearing summation
// ---------------------------------------------------------------------------

/// Evaluates `multiplier * sum(terms)` exactly as a polynomial.
///
/// Each term is multiplied by the multiplier and cancelled; the residual
/// denominators are joined into their multiset least common denominator D.
/// Every term is then expanded against D (numerator atoms plus D minus the
/// term's own denominator), the expansions are summed, and the final result
/// is divided exactly by D's atoms. Rational functions never materialize;
/// an inexact final division reports `ResidualDenominator`.
pub fn cleared_sum(
    terms: &[PochhammerFactorSet],
    multiplier: &PochhammerFactorSet,
) -> Result<LaurentPolynomial, QkitError> {
    let mut cleared: Vec<PochhammerFactorSet> = Vec::with_capacity(terms.len());
    for term in terms {
        let mut t = term.clone();
        t.mul_assign(multiplier);
        t.simplify();
        if !t.is_zero() {
            cleared.push(t);
        }
    }
    let mut common: AtomMultiset = AtomMultiset::new();
    for t in &cleared {
        for (atom, count) in &t.denominator {
            let entry = common.entry(*atom).or_insert(0);
            *entry = (*entry).max(*count);
        }
    }
    let mut acc = LaurentPolynomial::zero();
    for t in &cleared {
        let mut atoms = t.numerator.clone();
        for (atom, count) in &common {
            let have = t.denominator.get(atom).copied().unwrap_or(0);
            multiset_insert(&mut atoms, *atom, count - have);
        }
        acc.add_assign(&expand_atom_multiset(&t.unit, &atoms));
    }
    divide_atom_multiset(acc, &common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::Variable;

    fn sm(var: Variable, e: i64) -> SignedMonomial {
        SignedMonomial::var_pow(var, e)
    }

    fn q_pow(e: i64) -> SignedMonomial {
        SignedMonomial::q_pow(e)
    }

    #[test]
    fn telescoping_cancellation() {
        // (cq;q)_5 / (cq;q)_3 leaves exactly (cq^4;q)_2 upstairs.
        let cq = sm(Variable::C, 1).mul(&q_pow(1));
        let mut r = PochhammerFactorSet::one();
        r.mul_pochhammer(&cq, 5, 1);
        r.div_pochhammer(&cq, 3, 1).unwrap();
        let s = simplify_ratio(&r);
        assert!(s.denominator().is_empty());
        let expect: AtomMultiset = [(cq.mul(&q_pow(3)), 1), (cq.mul(&q_pow(4)), 1)]
            .into_iter()
            .collect();
        assert_eq!(*s.numerator(), expect);
    }

    #[test]
    fn self_ratio_cancels_to_unit() {
        let b = sm(Variable::B, 1);
        let mut r = PochhammerFactorSet::one();
        r.mul_pochhammer(&b, 4, 1);
        r.div_pochhammer(&b, 4, 1).unwrap();
        let s = simplify_ratio(&r);
        assert!(s.numerator().is_empty() && s.denominator().is_empty());
        assert_eq!(s.expand().unwrap(), LaurentPolynomial::one());
    }

    #[test]
    fn shorter_numerator_leaves_denominator() {
        // (q;q)_2 / (q;q)_3 -> denominator {(1 - q^3)}
        let q1 = q_pow(1);
        let mut r = PochhammerFactorSet::one();
        r.mul_pochhammer(&q1, 2, 1);
        r.div_pochhammer(&q1, 3, 1).unwrap();
        let s = simplify_ratio(&r);
        assert!(s.numerator().is_empty());
        let expect: AtomMultiset = [(q_pow(3), 1)].into_iter().collect();
        assert_eq!(*s.denominator(), expect);
        assert!(matches!(s.expand(), Err(QkitError::ResidualDenominator(_))));
    }

    #[test]
    fn vanishing_numerator_atom_is_explicit_zero() {
        let mut r = PochhammerFactorSet::one();
        r.mul_num_atom(SignedMonomial::one());
        assert!(r.is_zero());
        assert_eq!(r.expand().unwrap(), LaurentPolynomial::zero());
    }

    #[test]
    fn vanishing_denominator_atom_is_error() {
        let mut r = PochhammerFactorSet::one();
        assert_eq!(
            r.mul_den_atom(SignedMonomial::one()),
            Err(QkitError::ZeroDenominatorAtom)
        );
    }

    #[test]
    fn constant_atom_doubles() {
        // (1 - (-1)) = 2
        let mut r = PochhammerFactorSet::one();
        r.mul_num_atom(SignedMonomial::one().neg());
        assert_eq!(r.expand().unwrap(), LaurentPolynomial::constant(2));
    }

    #[test]
    fn cleared_sum_clears_across_terms() {
        // Neither 1/(1-q) nor -q/(1-q) is a polynomial, but their sum is 1.
        let mut t0 = PochhammerFactorSet::one();
        t0.mul_den_atom(q_pow(1)).unwrap();
        let mut t1 = PochhammerFactorSet::from_unit(q_pow(1).neg());
        t1.mul_den_atom(q_pow(1)).unwrap();
        let sum = cleared_sum(&[t0, t1], &PochhammerFactorSet::one()).unwrap();
        assert_eq!(sum, LaurentPolynomial::one());
    }

    #[test]
    fn cleared_sum_rejects_nonclearing() {
        // 1/(1-q) alone is not a polynomial.
        let mut t = PochhammerFactorSet::one();
        t.mul_den_atom(q_pow(1)).unwrap();
        assert!(matches!(
            cleared_sum(&[t], &PochhammerFactorSet::one()),
            Err(QkitError::ResidualDenominator(_))
        ));
    }
}
