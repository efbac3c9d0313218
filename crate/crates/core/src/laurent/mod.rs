//! Sparse Laurent polynomials with exact integer coefficients over the fixed
//! variable alphabet (q, z, a, b, c).
//!
//! A polynomial is a map from exponent vectors to nonzero `BigInt`
//! coefficients. The zero polynomial is the empty map; every operation
//! strips zero coefficients, so equality is plain structural equality.
//! Term order everywhere (iteration, printing, serialization) is graded
//! lexicographic, ascending: lower total degree first, ties broken by the
//! exponent tuple in alphabet order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub(crate) mod dense;

// ---------------------------------------------------------------------------
// Variables and exponent vectors
// ---------------------------------------------------------------------------

/// Number of variables in the fixed alphabet.
pub const VAR_COUNT: usize = 5;

/// The closed variable alphabet. The set is fixed by the identity catalog:
/// `q` is the series variable, `z` the theta variable, and `a`, `b`, `c`
/// formal parameters appearing in the general lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    Q = 0,
    Z = 1,
    A = 2,
    B = 3,
    C = 4,
}

impl Variable {
    pub const ALL: [Variable; VAR_COUNT] = [
        Variable::Q,
        Variable::Z,
        Variable::A,
        Variable::B,
        Variable::C,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Variable::Q => 'q',
            Variable::Z => 'z',
            Variable::A => 'a',
            Variable::B => 'b',
            Variable::C => 'c',
        }
    }

    pub fn from_symbol(ch: char) -> Option<Variable> {
        Variable::ALL.iter().copied().find(|v| v.symbol() == ch)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent vector of a single monomial; one signed exponent per variable.
///
/// `Ord` is the graded-lex order used for canonical term sequencing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    exps: [i64; VAR_COUNT],
}

impl ExponentVector {
    pub fn unit() -> Self {
        ExponentVector {
            exps: [0; VAR_COUNT],
        }
    }

    pub fn from_exps(exps: [i64; VAR_COUNT]) -> Self {
        ExponentVector { exps }
    }

    pub fn var_pow(var: Variable, e: i64) -> Self {
        let mut exps = [0; VAR_COUNT];
        exps[var.index()] = e;
        ExponentVector { exps }
    }

    pub fn get(&self, var: Variable) -> i64 {
        self.exps[var.index()]
    }

    pub fn exps(&self) -> &[i64; VAR_COUNT] {
        &self.exps
    }

    pub fn with(mut self, var: Variable, e: i64) -> Self {
        self.exps[var.index()] = e;
        self
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    /// Product of monomials: componentwise exponent sum.
    pub fn mul(&self, other: &ExponentVector) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e += o;
        }
        ExponentVector { exps }
    }

    /// Quotient of monomials: componentwise exponent difference.
    pub fn div(&self, other: &ExponentVector) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e -= o;
        }
        ExponentVector { exps }
    }

    /// Monomial power with a signed integer exponent.
    pub fn pow(&self, k: i64) -> Self {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e *= k;
        }
        ExponentVector { exps }
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

/// A monomial together with a sign: `+m` or `-m`. Units of the Laurent ring
/// up to integer factors; used for substitution values, Pochhammer bases and
/// series arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedMonomial {
    pub negative: bool,
    pub mono: ExponentVector,
}

impl SignedMonomial {
    pub fn one() -> Self {
        SignedMonomial {
            negative: false,
            mono: ExponentVector::unit(),
        }
    }

    pub fn var_pow(var: Variable, e: i64) -> Self {
        SignedMonomial {
            negative: false,
            mono: ExponentVector::var_pow(var, e),
        }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::var_pow(Variable::Q, e)
    }

    #[allow(clippy::should_implement_trait)] // chainable builder, not operator overloading
    pub fn neg(mut self) -> Self {
        self.negative = !self.negative;
        self
    }

    pub fn mul(&self, other: &SignedMonomial) -> Self {
        SignedMonomial {
            negative: self.negative != other.negative,
            mono: self.mono.mul(&other.mono),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        SignedMonomial {
            negative: self.negative && k.rem_euclid(2) == 1,
            mono: self.mono.pow(k),
        }
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.mono.is_unit()
    }

    pub fn coefficient(&self) -> BigInt {
        if self.negative {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    /// Exact division failed: the divisor does not divide the dividend.
    #[error("polynomial is not divisible by the divisor")]
    NonDivisible,
    /// Substituting zero for a variable that occurs with negative exponent.
    #[error("cannot substitute zero for {var}: negative exponent {exp} present")]
    NegativeExponentAtZero { var: char, exp: i64 },
    /// Evaluating a negative power of a variable at the value zero.
    #[error("evaluation divides by zero: {var} = 0 raised to exponent {exp}")]
    DivisionByZero { var: char, exp: i64 },
    /// Degree range requested for the zero polynomial.
    #[error("degree range of the zero polynomial is undefined")]
    ZeroPolynomial,
}

/// Parse failure for the canonical text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial parse error: {0}")]
pub struct ParseError(pub String);

// ---------------------------------------------------------------------------
// LaurentPolynomial
// ---------------------------------------------------------------------------

/// Substitution value for a single variable: zero or a signed monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Replacement {
    Zero,
    Monomial(SignedMonomial),
}

/// Sparse Laurent polynomial. Invariant: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::unit(), c);
        }
        LaurentPolynomial { terms }
    }

    pub fn term<T: Into<BigInt>>(coeff: T, mono: ExponentVector) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPolynomial { terms }
    }

    pub fn var_pow(var: Variable, e: i64) -> Self {
        Self::term(1, ExponentVector::var_pow(var, e))
    }

    pub fn from_monomial(m: &SignedMonomial) -> Self {
        Self::term(m.coefficient(), m.mono)
    }

    /// Builds from raw term pairs, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, BigInt)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (mono, coeff) in iter {
            p.add_term(mono, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExponentVector::unit())
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &ExponentVector) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub(crate) fn add_term(&mut self, mono: ExponentVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Accumulate in a hash map first; the tree is rebuilt once at the end.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<ExponentVector, BigInt> =
            HashMap::with_capacity(small.terms.len() * large.terms.len() / 2 + 1);
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let prod = c1 * c2;
                use std::collections::hash_map::Entry;
                match acc.entry(m) {
                    Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += prod;
                    }
                }
            }
        }
        LaurentPolynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &SignedMonomial) -> Self {
        let flip = m.negative;
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.mul(&m.mono), if flip { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    // -----------------------------------------------------------------------
    // Exact division
    // -----------------------------------------------------------------------

    /// Exact division: returns `self / divisor` when the divisor divides
    /// exactly, `NonDivisible` otherwise. The divisor must be nonzero.
    ///
    /// Elimination runs on leading slices in one chosen variable (the one
    /// where the divisor has the fewest distinct exponents, so binomial
    /// divisors like `1 + z` eliminate in single steps); slice quotients
    /// recurse on the remaining variables. Any leftover remainder, or a
    /// quotient escaping the exponent range forced by valuations, reports
    /// `NonDivisible`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = divisor.terms.iter().next().unwrap();
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                let (quot, rem) = num_integer::div_rem(c.clone(), dc.clone());
                if !rem.is_zero() {
                    return Err(LaurentError::NonDivisible);
                }
                out.insert(m.div(dm), quot);
            }
            return Ok(LaurentPolynomial { terms: out });
        }

        // Pick the elimination variable: fewest distinct divisor exponents
        // among variables where the divisor is non-constant.
        let mut best: Option<(usize, Variable)> = None;
        for var in Variable::ALL {
            let mut seen = std::collections::BTreeSet::new();
            for m in divisor.terms.keys() {
                seen.insert(m.get(var));
            }
            if seen.len() >= 2 && best.is_none_or(|(n, _)| seen.len() < n) {
                best = Some((seen.len(), var));
            }
        }
        let (_, var) = best.expect("multi-term divisor must vary in some variable");

        let (dmin, dmax) = divisor.var_range(var);
        let (pmin, pmax) = self.var_range(var);
        let qmin = pmin - dmin;
        if pmax - dmax < qmin {
            return Err(LaurentError::NonDivisible);
        }
        let d_top = divisor.slice(var, dmax);

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (_, rmax) = rem.var_range(var);
            let e = rmax - dmax;
            if e < qmin {
                return Err(LaurentError::NonDivisible);
            }
            let r_top = rem.slice(var, rmax);
            let c = r_top.exact_div(&d_top)?;
            let shifted = c.mul(&Self::var_pow(var, e));
            rem = rem.sub(&shifted.mul(divisor));
            quot.add_assign(&shifted);
        }
        Ok(quot)
    }

    fn var_range(&self, var: Variable) -> (i64, i64) {
        let mut min = i64::MAX;
        let mut max = i64::MIN;
        for m in self.terms.keys() {
            let e = m.get(var);
            min = min.min(e);
            max = max.max(e);
        }
        (min, max)
    }

    /// Coefficient slice at `var^e`, with the variable removed.
    fn slice(&self, var: Variable, e: i64) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.get(var) == e)
                .map(|(m, c)| (m.with(var, 0), c.clone()))
                .collect(),
        }
    }

    // -----------------------------------------------------------------------
    // Substitution, extraction, truncation
    // -----------------------------------------------------------------------

    /// Substitutes `value` for `var`. Substituting zero requires every
    /// occurrence of the variable to have nonnegative exponent.
    pub fn substitute(&self, var: Variable, value: &Replacement) -> Result<Self, LaurentError> {
        match value {
            Replacement::Zero => {
                let mut out = Self::zero();
                for (m, c) in &self.terms {
                    let e = m.get(var);
                    if e < 0 {
                        return Err(LaurentError::NegativeExponentAtZero {
                            var: var.symbol(),
                            exp: e,
                        });
                    }
                    if e == 0 {
                        out.add_term(*m, c.clone());
                    }
                }
                Ok(out)
            }
            Replacement::Monomial(sm) => {
                let mut out = Self::zero();
                for (m, c) in &self.terms {
                    let e = m.get(var);
                    let repl = sm.pow(e);
                    let mono = m.with(var, 0).mul(&repl.mono);
                    out.add_term(mono, if repl.negative { -c } else { c.clone() });
                }
                Ok(out)
            }
        }
    }

    /// Coefficient of `var^e`, as a polynomial in the remaining variables.
    pub fn coeff_extract(&self, var: Variable, e: i64) -> Self {
        self.slice(var, e)
    }

    /// Drops all terms with exponent of `var` above `max_exp`.
    pub fn truncate(&self, var: Variable, max_exp: i64) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.get(var) <= max_exp)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Min and max exponent of `var` over all terms. Undefined on zero.
    pub fn degree_range(&self, var: Variable) -> Result<(i64, i64), LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        Ok(self.var_range(var))
    }

    // -----------------------------------------------------------------------
    // Evaluation
    // -----------------------------------------------------------------------

    /// Evaluates at an exact rational point. Negative exponents require the
    /// corresponding coordinate to be nonzero.
    pub fn eval_rational(&self, point: &RationalPoint) -> Result<BigRational, LaurentError> {
        let mut power_cache: HashMap<(usize, i64), BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut prod = BigRational::from(c.clone());
            for var in Variable::ALL {
                let e = m.get(var);
                if e == 0 {
                    continue;
                }
                let base = &point.values[var.index()];
                if base.is_zero() {
                    if e < 0 {
                        return Err(LaurentError::DivisionByZero {
                            var: var.symbol(),
                            exp: e,
                        });
                    }
                    prod = BigRational::zero();
                    continue;
                }
                let key = (var.index(), e);
                let pw = power_cache
                    .entry(key)
                    .or_insert_with(|| rational_pow(base, e));
                prod *= &*pw;
            }
            total += prod;
        }
        Ok(total)
    }
}

fn rational_pow(base: &BigRational, e: i64) -> BigRational {
    let mut result = BigRational::one();
    let mut acc = if e < 0 { base.recip() } else { base.clone() };
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            result *= &acc;
        }
        n >>= 1;
        if n > 0 {
            acc = &acc * &acc;
        }
    }
    result
}

/// One exact rational coordinate per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub values: [BigRational; VAR_COUNT],
}

impl RationalPoint {
    pub fn new(values: [BigRational; VAR_COUNT]) -> Self {
        RationalPoint { values }
    }

    pub fn from_i64(values: [(i64, i64); VAR_COUNT]) -> Self {
        RationalPoint {
            values: values.map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }
}

// ---------------------------------------------------------------------------
// Operator impls
// ---------------------------------------------------------------------------

impl std::ops::Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial::neg(self)
    }
}

// ---------------------------------------------------------------------------
// Canonical text format
// ---------------------------------------------------------------------------

impl fmt::Display for LaurentPolynomial {
    /// Canonical form: terms ascending in graded-lex order, each as
    /// `coeff*var^exp*...` with the magnitude printed and the sign carried
    /// by the ` + ` / ` - ` joiner. Example: `1 - 1*q + 1*q^2*z^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mono, coeff)) in self.terms.iter().enumerate() {
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", coeff.abs())?;
            for var in Variable::ALL {
                let e = mono.get(var);
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    write!(f, "*{}", var.symbol())?;
                } else {
                    write!(f, "*{}^{}", var.symbol(), e)?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPolynomial {
    type Err = ParseError;

    /// Parses the canonical text format (and tolerates missing explicit
    /// coefficients, so `q^2*z` is accepted as `1*q^2*z`).
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseError("empty input".into()));
        }
        let mut p = LaurentPolynomial::zero();
        let mut rest = s;
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r.trim_start();
        }
        loop {
            let (term_str, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(i), Some(j)) if i < j => (&rest[..i], Some((false, &rest[i + 3..]))),
                (Some(_), Some(j)) => (&rest[..j], Some((true, &rest[j + 3..]))),
                (Some(i), None) => (&rest[..i], Some((false, &rest[i + 3..]))),
                (None, Some(j)) => (&rest[..j], Some((true, &rest[j + 3..]))),
                (None, None) => (rest, None),
            };
            let (mono, coeff) = parse_term(term_str.trim())?;
            p.add_term(mono, if negative { -coeff } else { coeff });
            match next {
                Some((neg, r)) => {
                    negative = neg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(p)
    }
}

fn parse_term(s: &str) -> Result<(ExponentVector, BigInt), ParseError> {
    if s.is_empty() {
        return Err(ParseError("empty term".into()));
    }
    let mut coeff = BigInt::one();
    let mut mono = ExponentVector::unit();
    let mut saw_coeff = false;
    for (i, factor) in s.split('*').enumerate() {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(ParseError(format!("empty factor in term `{s}`")));
        }
        if factor.chars().next().unwrap().is_ascii_digit() {
            if i != 0 || saw_coeff {
                return Err(ParseError(format!("misplaced coefficient in `{s}`")));
            }
            coeff = factor
                .parse::<BigInt>()
                .map_err(|e| ParseError(format!("bad coefficient `{factor}`: {e}")))?;
            saw_coeff = true;
            continue;
        }
        let mut chars = factor.chars();
        let sym = chars.next().unwrap();
        let var = Variable::from_symbol(sym)
            .ok_or_else(|| ParseError(format!("unknown variable `{sym}`")))?;
        let rest: String = chars.collect();
        let e: i64 = if rest.is_empty() {
            1
        } else if let Some(exp_str) = rest.strip_prefix('^') {
            exp_str
                .parse()
                .map_err(|e| ParseError(format!("bad exponent `{exp_str}`: {e}")))?
        } else {
            return Err(ParseError(format!("malformed factor `{factor}`")));
        };
        mono = mono.mul(&ExponentVector::var_pow(var, e));
    }
    Ok((mono, coeff))
}

// ---------------------------------------------------------------------------
// Serde: canonical string representation
// ---------------------------------------------------------------------------

impl serde::Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
