//! Executable catalog of polynomial identities: parameter schemas,
//! normalizers, exact evaluators for both sides, instance verification,
//! and the specialization checks connecting general entries to special ones.
//!
//! Every evaluator returns a canonical polynomial; identities whose raw
//! statement involves Pochhammer denominators are stated here with an
//! explicit polynomial normalizer multiplied into both sides, so exact
//! equality of the returned polynomials is the claim being verified.

mod cubic;
mod id1_family;
mod id2_family;
mod lemmas;
mod triple;

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::Instant;

use thiserror::Error;

use crate::laurent::{
    LaurentError, LaurentPolynomial, RationalPoint, Replacement, SignedMonomial, Variable,
};
use crate::qkit::QkitError;

pub use cubic::{cubic_sum_normalized_term, id3_term, id4_term};
pub use id1_family::{id1_lhs_by_division, id1_lhs_by_expansion};
pub use id2_family::{id2_rhs_summand, id2b_single_sum};
pub use triple::analytic_triple_count;

/// Parameter assignment for one identity instance, keyed by parameter name.
pub type Params = BTreeMap<String, i64>;

/// Builds a [`Params`] map from name/value pairs.
pub fn params(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
    #[error("missing parameter {0}")]
    MissingParameter(String),
    #[error("unexpected parameter {0}")]
    UnexpectedParameter(String),
    #[error("parameter {name}={value} out of domain: {reason}")]
    OutOfDomain {
        name: String,
        value: i64,
        reason: String,
    },
    #[error("specialization {reduction} fails at {params}: difference {difference}")]
    ReductionMismatch {
        reduction: String,
        params: String,
        difference: String,
    },
    #[error(transparent)]
    Summation(#[from] QkitError),
    #[error(transparent)]
    Ring(#[from] LaurentError),
}

pub(crate) fn req(p: &Params, name: &str) -> Result<i64, EngineError> {
    p.get(name)
        .copied()
        .ok_or_else(|| EngineError::MissingParameter(name.to_string()))
}

/// Parity of a possibly negative sign exponent.
fn neg_if_odd(e: i64) -> bool {
    e.rem_euclid(2) == 1
}

/// Upper bound of a parameter domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamMax {
    /// No finite upper bound; plans must bound this parameter explicitly.
    Unbounded,
    /// Bounded by floor(other/2) where `other` names a sibling parameter.
    HalfFloorOf(&'static str),
    /// Bounded by the value of a sibling parameter.
    AtMost(&'static str),
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: ParamMax,
}

const fn unbounded(name: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        min: 0,
        max: ParamMax::Unbounded,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Main,
    Lemma,
    LimitForm,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Main => "main",
            Tag::Lemma => "lemma",
            Tag::LimitForm => "limit-form",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lhs,
    Rhs,
}

/// One evaluated side: the canonical polynomial plus the number of summands
/// the defining sum enumerated to produce it.
#[derive(Debug, Clone)]
pub struct SideEval {
    pub poly: LaurentPolynomial,
    pub summands: u64,
}

impl SideEval {
    pub(crate) fn new(poly: LaurentPolynomial, summands: u64) -> Self {
        SideEval { poly, summands }
    }
}

type Evaluator = fn(&Params) -> Result<SideEval, EngineError>;

pub struct IdentityEntry {
    pub id: &'static str,
    /// Human-readable statement of the normalized identity being checked.
    pub statement: &'static str,
    /// The polynomial multiplier applied to both raw sides ("unit" if none).
    pub normalizer: &'static str,
    pub params: &'static [ParamSpec],
    pub tags: &'static [Tag],
    pub lhs: Evaluator,
    pub rhs: Evaluator,
}

pub fn catalog() -> &'static [IdentityEntry] {
    static CATALOG: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn entry(id: &str) -> Result<&'static IdentityEntry, EngineError> {
    catalog()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| EngineError::UnknownIdentity(id.to_string()))
}

/// Checks a parameter map against an entry's schema.
pub fn validate_params(entry: &IdentityEntry, p: &Params) -> Result<(), EngineError> {
    for spec in entry.params {
        let v = req(p, spec.name)?;
        if v < spec.min {
            return Err(EngineError::OutOfDomain {
                name: spec.name.to_string(),
                value: v,
                reason: format!("minimum is {}", spec.min),
            });
        }
        let cap = match spec.max {
            ParamMax::Unbounded => None,
            ParamMax::HalfFloorOf(other) => Some((req(p, other)? / 2, format!("floor({other}/2)"))),
            ParamMax::AtMost(other) => Some((req(p, other)?, other.to_string())),
        };
        if let Some((cap, label)) = cap {
            if v > cap {
                return Err(EngineError::OutOfDomain {
                    name: spec.name.to_string(),
                    value: v,
                    reason: format!("maximum is {label} = {cap}"),
                });
            }
        }
    }
    for name in p.keys() {
        if !entry.params.iter().any(|s| s.name == name) {
            return Err(EngineError::UnexpectedParameter(name.clone()));
        }
    }
    Ok(())
}

pub fn evaluate_side(id: &str, side: Side, p: &Params) -> Result<SideEval, EngineError> {
    let e = entry(id)?;
    validate_params(e, p)?;
    match side {
        Side::Lhs => (e.lhs)(p),
        Side::Rhs => (e.rhs)(p),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceStatus {
    Equal,
    Mismatch,
    Error,
}

impl InstanceStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceStatus::Equal => "equal",
            InstanceStatus::Mismatch => "mismatch",
            InstanceStatus::Error => "error",
        }
    }
}

/// Outcome of comparing both sides of one instance.
#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub status: InstanceStatus,
    /// Canonical text of lhs - rhs when status is mismatch.
    pub difference: Option<LaurentPolynomial>,
    pub error: Option<String>,
    pub lhs_term_count: u64,
    pub rhs_summand_count: u64,
    pub lhs_time_us: u64,
    pub rhs_time_us: u64,
}

/// Evaluates both sides of `id` at `p` and compares them exactly.
///
/// Returns `Err` only for schema-level problems (unknown id, bad params);
/// evaluator failures are folded into the outcome with status `Error`.
/// `corrupt` is a negative-control hook: it adds 1 to the constant
/// coefficient of the right-hand side after evaluation.
pub fn verify_instance(
    id: &str,
    p: &Params,
    corrupt: bool,
) -> Result<InstanceOutcome, EngineError> {
    let e = entry(id)?;
    validate_params(e, p)?;
    let lhs_start = Instant::now();
    let lhs = (e.lhs)(p);
    let lhs_time_us = lhs_start.elapsed().as_micros() as u64;
    let rhs_start = Instant::now();
    let rhs = (e.rhs)(p);
    let rhs_time_us = rhs_start.elapsed().as_micros() as u64;
    let (lhs, rhs) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (l, r) => {
            let msg = [l.err(), r.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join("; ");
            return Ok(InstanceOutcome {
                status: InstanceStatus::Error,
                difference: None,
                error: Some(msg),
                lhs_term_count: 0,
                rhs_summand_count: 0,
                lhs_time_us,
                rhs_time_us,
            });
        }
    };
    let mut rhs_poly = rhs.poly;
    if corrupt {
        rhs_poly.add_assign(&LaurentPolynomial::one());
    }
    let difference = lhs.poly.sub(&rhs_poly);
    let status = if difference.is_zero() {
        InstanceStatus::Equal
    } else {
        InstanceStatus::Mismatch
    };
    Ok(InstanceOutcome {
        status,
        difference: (!difference.is_zero()).then_some(difference),
        error: None,
        lhs_term_count: lhs.poly.term_count() as u64,
        rhs_summand_count: rhs.summands,
        lhs_time_us,
        rhs_time_us,
    })
}

/// Evaluates both polynomials at `points` pseudo-random rational points
/// (derived deterministically from `seed`) and reports whether every point
/// agrees. Used as a consistency check against full polynomial comparison.
pub fn rational_precheck(
    lhs: &LaurentPolynomial,
    rhs: &LaurentPolynomial,
    seed: u64,
    points: usize,
) -> Result<bool, LaurentError> {
    let mut state = seed;
    let mut next = move || {
        // SplitMix64 step; cheap, deterministic, no external state.
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for _ in 0..points {
        let mut coords = [(1i64, 1i64); crate::laurent::VAR_COUNT];
        for c in coords.iter_mut() {
            let num = (next() % 19) as i64 - 9;
            let num = if num == 0 { 1 } else { num };
            let den = (next() % 7) as i64 + 1;
            *c = (num, den);
        }
        let point = RationalPoint::from_i64(coords);
        if lhs.eval_rational(&point)? != rhs.eval_rational(&point)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Specialization checks
// ---------------------------------------------------------------------------

/// A verified specialization: substituting or assembling instances of one
/// entry reproduces another entry exactly.
pub struct Reduction {
    pub id: &'static str,
    pub general: &'static str,
    pub special: &'static str,
    pub description: &'static str,
    /// Name of the single size parameter the check ranges over.
    pub size_param: &'static str,
    pub check: fn(i64) -> Result<(), EngineError>,
}

pub fn reductions() -> &'static [Reduction] {
    static REDUCTIONS: OnceLock<Vec<Reduction>> = OnceLock::new();
    REDUCTIONS.get_or_init(|| {
        vec![
            Reduction {
                id: "id1b_to_id1",
                general: "id1b",
                special: "id1",
                description: "setting c = 0 in both normalized sides of id1b yields id1",
                size_param: "L",
                check: |l| check_c_zero("id1b_to_id1", "id1b", "id1", &params(&[("L", l)])),
            },
            Reduction {
                id: "id1c_to_id1",
                general: "id1c",
                special: "id1",
                description: "setting c = 0 in both normalized sides of id1c yields id1",
                size_param: "L",
                check: |l| check_c_zero("id1c_to_id1", "id1c", "id1", &params(&[("L", l)])),
            },
            Reduction {
                id: "bn_c_to_bn",
                general: "lemma_bN_c",
                special: "lemma_bN",
                description: "setting c = 0 in both normalized sides of lemma_bN_c yields lemma_bN",
                size_param: "N",
                check: |n| {
                    check_c_zero("bn_c_to_bn", "lemma_bN_c", "lemma_bN", &params(&[("N", n)]))
                },
            },
            Reduction {
                id: "bn_assembles_id1",
                general: "lemma_bN",
                special: "id1",
                description: "summing z^m q^{T_|m|} times the b = q^{|m|+1}, N = L-|m| instance \
                              of lemma_bN over m in [-L, L] yields each side of id1",
                size_param: "L",
                check: check_bn_assembly,
            },
            Reduction {
                id: "cubic_to_id3",
                general: "cubic_a0",
                special: "id3",
                description: "at n = 3L the normalized cubic-sum term at k = j+L equals \
                              (-1)^L times the id3 summand at j",
                size_param: "L",
                check: |l| check_cubic_termwise(l, 3 * l, "cubic_to_id3", id3_term),
            },
            Reduction {
                id: "cubic_to_id4",
                general: "cubic_a0",
                special: "id4",
                description: "at n = 3L+1 the normalized cubic-sum term at k = j+L equals \
                              (-1)^L times the id4 summand at j",
                size_param: "L",
                check: |l| check_cubic_termwise(l, 3 * l + 1, "cubic_to_id4", id4_term),
            },
        ]
    })
}

pub fn reduction(id: &str) -> Result<&'static Reduction, EngineError> {
    reductions()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| EngineError::UnknownIdentity(id.to_string()))
}

fn mismatch(reduction: &str, at: String, difference: &LaurentPolynomial) -> EngineError {
    EngineError::ReductionMismatch {
        reduction: reduction.to_string(),
        params: at,
        difference: difference.to_string(),
    }
}

fn check_c_zero(name: &str, general: &str, special: &str, p: &Params) -> Result<(), EngineError> {
    for side in [Side::Lhs, Side::Rhs] {
        let g = evaluate_side(general, side, p)?
            .poly
            .substitute(Variable::C, &Replacement::Zero)?;
        let s = evaluate_side(special, side, p)?.poly;
        let diff = g.sub(&s);
        if !diff.is_zero() {
            return Err(mismatch(name, format!("{p:?} ({side:?})"), &diff));
        }
    }
    Ok(())
}

fn check_bn_assembly(l: i64) -> Result<(), EngineError> {
    use crate::qkit::triangular;
    for side in [Side::Lhs, Side::Rhs] {
        let mut acc = LaurentPolynomial::zero();
        for m in -l..=l {
            let b_value = SignedMonomial::q_pow(m.abs() + 1);
            let instance = evaluate_side("lemma_bN", side, &params(&[("N", l - m.abs())]))?
                .poly
                .substitute(Variable::B, &Replacement::Monomial(b_value))?;
            let weight = SignedMonomial::var_pow(Variable::Z, m)
                .mul(&SignedMonomial::q_pow(triangular(m.abs())));
            acc.add_assign(&instance.mul_monomial(&weight));
        }
        let target = evaluate_side("id1", side, &params(&[("L", l)]))?.poly;
        let diff = acc.sub(&target);
        if !diff.is_zero() {
            return Err(mismatch(
                "bn_assembles_id1",
                format!("L={l} ({side:?})"),
                &diff,
            ));
        }
    }
    Ok(())
}

fn check_cubic_termwise(
    l: i64,
    n: i64,
    name: &str,
    term: fn(i64, i64) -> LaurentPolynomial,
) -> Result<(), EngineError> {
    for k in 0..=n / 2 {
        let j = k - l;
        let mut cubic_term = cubic_sum_normalized_term(n, k)?;
        if l % 2 != 0 {
            cubic_term = cubic_term.neg();
        }
        let diff = cubic_term.sub(&term(l, j));
        if !diff.is_zero() {
            return Err(mismatch(name, format!("L={l} k={k}"), &diff));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Catalog construction
// ---------------------------------------------------------------------------

fn build_catalog() -> Vec<IdentityEntry> {
    const L: &[ParamSpec] = &[unbounded("L")];
    const N_PARAM: &[ParamSpec] = &[unbounded("N")];
    const SMALL_N: &[ParamSpec] = &[unbounded("n")];
    const NM: &[ParamSpec] = &[
        unbounded("n"),
        ParamSpec {
            name: "m",
            min: 0,
            max: ParamMax::AtMost("n"),
        },
    ];
    const LJ: &[ParamSpec] = &[
        unbounded("L"),
        ParamSpec {
            name: "j",
            min: 0,
            max: ParamMax::HalfFloorOf("L"),
        },
    ];
    vec![
        IdentityEntry {
            id: "id1",
            statement: "sum_{n=0}^{L} q^{T_n} (z^-n + z^{n+1})/(1+z) = \
                        sum_{i,j,k>=0} (-1)^k z^{i-j} q^{T_i+T_j+T_k} [L-i,j][L-j,k][L-k,i]",
            normalizer: "unit (each left term divided exactly by 1+z)",
            params: L,
            tags: &[Tag::Main],
            lhs: id1_family::id1_lhs,
            rhs: id1_family::id1_rhs,
        },
        IdentityEntry {
            id: "lemma_zexp",
            statement: "sum_{n=0}^{L} q^{T_n} (z^-n + z^{n+1})/(1+z) = \
                        sum_{m=-L}^{L} sum_{n=0}^{L-|m|} (-1)^n z^m q^{T_{n+|m|}}",
            normalizer: "unit",
            params: L,
            tags: &[Tag::Lemma],
            lhs: id1_family::zexp_lhs,
            rhs: id1_family::zexp_rhs,
        },
        IdentityEntry {
            id: "lemma_bN",
            statement: "sum_{n=0}^{N} (-1)^n b^n q^{C(n,2)} = \
                        sum_{j=0}^{floor(N/2)} sum_{k=0}^{N-j} (-1)^k b^j q^{j^2+T_k} \
                        (q,b;q)_{N-j} (b;q)_{N-k} / \
                        ((q,b;q)_j (q,b;q)_{N-j-k} (q;q)_k (q;q)_{N-2j})",
            normalizer: "unit (right side cleared over its common q-factorial denominator)",
            params: N_PARAM,
            tags: &[Tag::Lemma],
            lhs: id1_family::bn_lhs,
            rhs: id1_family::bn_rhs,
        },
        IdentityEntry {
            id: "lemma_bN_c",
            statement: "sum_{n=0}^{N} (-1)^n b^n q^{C(n,2)} (cq;q)_N / ((cq;q)_n (cq;q)_{N-n}) = \
                        sum_{j,k} (-1)^k b^j q^{j^2+T_k} (c;q)_j (q,b;q)_{N-j} (b;q)_{N-k} / \
                        ((q,b,cq;q)_j (q,b;q)_{N-j-k} (q;q)_k (q;q)_{N-2j})",
            normalizer: "both sides multiplied by (cq;q)_N",
            params: N_PARAM,
            tags: &[Tag::Lemma],
            lhs: id1_family::bn_c_lhs,
            rhs: id1_family::bn_c_rhs,
        },
        IdentityEntry {
            id: "id1b",
            statement: "sum_{n=-L}^{L} sum_{m=-L}^{n} (-1)^{n+m} z^m q^{T_n} \
                        (cq;q)_{L-m} / ((cq;q)_{L-n} (cq;q)_{n-m}) = \
                        sum_{i,j,k>=0} (-1)^k z^{i-j} q^{T_i+T_j+T_k} \
                        (1-c)/(1-c q^j) [L-i,j][L-j,k][L-k,i]",
            normalizer: "both sides multiplied by (cq;q)_L",
            params: L,
            tags: &[Tag::Main],
            lhs: id1_family::id1b_lhs,
            rhs: id1_family::id1b_rhs,
        },
        IdentityEntry {
            id: "id1c",
            statement: "sum_{n=0}^{L} sum_{m=-n}^{n} (-1)^{n+m} z^m q^{T_n} \
                        (cq;q)_{L-|m|} / ((cq;q)_{L-n} (cq;q)_{n-|m|}) = \
                        sum_{i,j,k>=0} (-1)^k z^{i-j} q^{T_i+T_j+T_k} \
                        (1-c)/(1-c q^{min(i,j)}) [L-i,j][L-j,k][L-k,i]",
            normalizer: "both sides multiplied by (cq;q)_L",
            params: L,
            tags: &[Tag::Main],
            lhs: id1_family::id1c_lhs,
            rhs: id1_family::id1c_rhs,
        },
        IdentityEntry {
            id: "id1_var_a",
            statement:
                "sum_{n=0}^{2L} q^{T_{L-n}} ((-1)^n z^-L q^{n(2L-n+1)} + z^{L-n+1})/(q^n+z) \
                        = sum_{i,j,k>=0} (-1)^k z^{i-j} q^{T_i+T_j+T_k-j} [L-i,j][L-j,k][L-k,i]",
            normalizer: "unit (each left term divided exactly by q^n + z)",
            params: L,
            tags: &[Tag::Main, Tag::LimitForm],
            lhs: id1_family::var_a_lhs,
            rhs: id1_family::var_a_rhs,
        },
        IdentityEntry {
            id: "id1_var_b",
            statement: "sum_{n=0}^{L} q^{T_n} { ((-1)^n q^{(n+1)(L-n)} + z^{n+1})/(q^{L-n}+z) \
                        + ((-1)^{n+1} q^{n(L-n)} + z^-n)/(1+z q^{L-n}) } = \
                        sum_{i,j,k>=0} (-1)^k z^{i-j} q^{T_i+T_j+T_k-min(i,j)} \
                        [L-i,j][L-j,k][L-k,i]",
            normalizer: "unit (each left term divided exactly as displayed)",
            params: L,
            tags: &[Tag::Main, Tag::LimitForm],
            lhs: id1_family::var_b_lhs,
            rhs: id1_family::var_b_rhs,
        },
        IdentityEntry {
            id: "id2",
            statement: "sum_{i,j>=0} (-1)^j z^{2j} q^{T_i+T_j} [L-j,i][i,j] = \
                        sum_{i,j,k>=0} (-1)^j z^{i+j} q^{T_i+T_j+T_k} [L-i,j][L-j,k][L-k,i]",
            normalizer: "unit",
            params: L,
            tags: &[Tag::Main],
            lhs: id2_family::id2_lhs,
            rhs: id2_family::id2_rhs,
        },
        IdentityEntry {
            id: "lemma_LHS2",
            statement:
                "sum_{i,j>=0} (-1)^j z^{2j} q^{T_i+T_j} [L-j,i][i,j] = \
                        sum_{j=0}^{floor(L/2)} (-1)^j z^{2j} q^{j(j+1)} [L-j,j] (-q^{j+1};q)_{L-2j}",
            normalizer: "unit",
            params: L,
            tags: &[Tag::Lemma],
            lhs: id2_family::lhs2_lhs,
            rhs: id2_family::lhs2_rhs,
        },
        IdentityEntry {
            id: "lemma_z2j",
            statement: "sum_{i=0}^{2j} sum_{k} (-1)^{i-j} q^{(i-j)^2+T_k} \
                        [L-i,2j-i][L+i-2j,k][L-k,i] = (-q;q)_{L-2j} [L-j,j]_{q^2}",
            normalizer: "both sides multiplied by (-q;q)_{L-2j}",
            params: LJ,
            tags: &[Tag::Lemma],
            lhs: id2_family::z2j_lhs,
            rhs: id2_family::z2j_rhs,
        },
        IdentityEntry {
            id: "id2b",
            statement: "sum_{j>=0} (z^2 q^2;q^2)_j q^{C(L-2j,2)} [L+1,2j+1] = \
                        sum_{i,j,k>=0} (-1)^j z^{i+j} q^{T_i+T_j+T_k} [L-i,j][L-j,k][L-k,i]",
            normalizer: "unit",
            params: L,
            tags: &[Tag::Main],
            lhs: id2_family::id2b_lhs,
            rhs: id2_family::id2b_rhs,
        },
        IdentityEntry {
            id: "lemma_z1",
            statement: "(aq^-m;q)_n * phi(a, q^-n; aq^-m; q, 1) = \
                        (q^-n;q)_n (a;q)_{n-m} for 0 <= m <= n \
                        (false for m > n, hence the domain restriction)",
            normalizer: "both sides multiplied by (aq^-m;q)_n",
            params: NM,
            tags: &[Tag::Lemma],
            lhs: lemmas::z1_lhs,
            rhs: lemmas::z1_rhs,
        },
        IdentityEntry {
            id: "lemma_qbthm",
            statement: "sum_{k=0}^{n} (q^-n;q)_k z^k / (q;q)_k = (z q^-n;q)_n",
            normalizer: "unit",
            params: SMALL_N,
            tags: &[Tag::Lemma],
            lhs: lemmas::qbthm_lhs,
            rhs: lemmas::qbthm_rhs,
        },
        IdentityEntry {
            id: "lemma_qCV",
            statement: "(c;q)_n * phi(a, q^-n; c; q, q) = a^n (c/a;q)_n",
            normalizer: "both sides multiplied by (c;q)_n",
            params: SMALL_N,
            tags: &[Tag::Lemma],
            lhs: lemmas::qcv_lhs,
            rhs: lemmas::qcv_rhs,
        },
        IdentityEntry {
            id: "lemma_saalschutz",
            statement: "(c, abq^{1-n}/c;q)_n * phi(a, b, q^-n; c, abq^{1-n}/c; q, q) = \
                        (-1)^n (ab/c)^n q^{-C(n,2)} (c/a;q)_n (c/b;q)_n",
            normalizer: "both sides multiplied by (c;q)_n (abq^{1-n}/c;q)_n",
            params: SMALL_N,
            tags: &[Tag::Lemma],
            lhs: lemmas::saalschutz_lhs,
            rhs: lemmas::saalschutz_rhs,
        },
        IdentityEntry {
            id: "lemma_ex26",
            statement: "q^{n^2} * sum_{i=0}^{2n} q^{T_i} (q^{-2n};q)_i / (q;q)_i = \
                        (-1)^n (q;q^2)_n",
            normalizer: "both sides multiplied by q^{n^2}",
            params: SMALL_N,
            tags: &[Tag::Lemma, Tag::LimitForm],
            lhs: lemmas::ex26_lhs,
            rhs: lemmas::ex26_rhs,
        },
        IdentityEntry {
            id: "lemma_ex26_full",
            statement: "(q^{1-n}/b, q^{1-n}/c, -bc;q)_n q^{n(n-1)} * \
                        phi(q^-n, b, c, -q^{1-n}/bc; q^{1-n}/b, q^{1-n}/c, -bc; q, q) = \
                        0 for n odd, else (bc)^-n (q;q^2)_{n/2} (b^2;q^2)_{n/2} (c^2;q^2)_{n/2} \
                        (b^2 c^2 q^n;q^2)_{n/2}",
            normalizer: "both sides multiplied by (q^{1-n}/b, q^{1-n}/c, -bc;q)_n q^{n(n-1)}",
            params: SMALL_N,
            tags: &[Tag::Lemma],
            lhs: lemmas::ex26_full_lhs,
            rhs: lemmas::ex26_full_rhs,
        },
        IdentityEntry {
            id: "cubic_a0",
            statement: "q^{ceil(n(n-1)/6)} * sum_{k=0}^{floor(n/2)} q^k (q^-n;q)_{2k} / \
                        ((q;q)_k (q^-n;q)_k) = 0 if n = 2 mod 3, else (-1)^{floor(n/3)}",
            normalizer: "both sides multiplied by q^{ceil(n(n-1)/6)}",
            params: SMALL_N,
            tags: &[Tag::Lemma, Tag::LimitForm],
            lhs: cubic::cubic_a0_lhs,
            rhs: cubic::cubic_a0_rhs,
        },
        IdentityEntry {
            id: "id3",
            statement: "sum_{j=-L}^{floor(L/2)} (-1)^j q^{j(3j+1)/2} [2L-j,L+j] = 1",
            normalizer: "unit",
            params: L,
            tags: &[Tag::Main],
            lhs: cubic::id3_lhs,
            rhs: cubic::id3_rhs,
        },
        IdentityEntry {
            id: "id4",
            statement: "sum_{j=-L}^{floor((L+1)/2)} (-1)^j q^{j(3j-1)/2} [2L-j+1,L+j] = 1",
            normalizer: "unit",
            params: L,
            tags: &[Tag::Main],
            lhs: cubic::id4_lhs,
            rhs: cubic::id4_rhs,
        },
        IdentityEntry {
            id: "cubic_ainf",
            statement: "sum_{k=0}^{floor(n/2)} (-1)^k q^{C(k,2)} [n-k,k] = \
                        0 if n = 2 mod 3, else (-1)^{floor(n/3)} q^{n(n-1)/6}",
            normalizer: "unit",
            params: SMALL_N,
            tags: &[Tag::Lemma, Tag::LimitForm],
            lhs: cubic::cubic_ainf_lhs,
            rhs: cubic::cubic_ainf_rhs,
        },
    ]
}
