//! Acceptance gate: eight criteria, each printing exactly one PASS or FAIL
//! line. Every comparison is exact polynomial equality; there are no
//! tolerances anywhere. Run with `--nocapture` to see the lines for passing
//! criteria.

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use qid::bench::bench;
use qid::limits::run_suite;
use qid::plan::{Plan, PlanInstance};
use qid::runner::run_plan;
use qid_core::identities::{
    evaluate_side, id2_rhs_summand, id2b_single_sum, params, rational_precheck, reduction,
    verify_instance, InstanceStatus, Side,
};
use qid_core::qkit::{pochhammer, q_binomial};
use qid_core::{ExponentVector, LaurentPolynomial, SignedMonomial, Variable};
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

type Grid = (&'static str, &'static [(&'static str, i64, i64)]);

fn criterion(number: u8, run: impl FnOnce() -> Result<String, String>) {
    match run() {
        Ok(detail) => println!("PASS criterion {number}: {detail}"),
        Err(msg) => {
            println!("FAIL criterion {number}: {msg}");
            panic!("criterion {number}: {msg}");
        }
    }
}

#[test]
fn criterion_1_catalog_verification() {
    criterion(1, || {
        let grids: &[Grid] = &[
            ("id1", &[("L", 0, 25)]),
            ("id2", &[("L", 0, 25)]),
            ("id2b", &[("L", 0, 25)]),
            ("lemma_LHS2", &[("L", 0, 25)]),
            ("id3", &[("L", 0, 150)]),
            ("id4", &[("L", 0, 150)]),
            ("id1_var_a", &[("L", 0, 20)]),
            ("id1_var_b", &[("L", 0, 20)]),
            ("id1b", &[("L", 0, 12)]),
            ("id1c", &[("L", 0, 12)]),
            ("lemma_zexp", &[("L", 0, 25)]),
            ("lemma_bN", &[("N", 0, 20)]),
            ("lemma_bN_c", &[("N", 0, 10)]),
            ("lemma_z1", &[("n", 0, 10), ("m", 0, 10)]),
            ("lemma_qbthm", &[("n", 0, 20)]),
            ("lemma_qCV", &[("n", 0, 12)]),
            ("lemma_saalschutz", &[("n", 0, 8)]),
            ("lemma_z2j", &[("L", 0, 18), ("j", 0, 9)]),
            ("lemma_ex26", &[("n", 0, 40)]),
            ("lemma_ex26_full", &[("n", 0, 8)]),
            ("cubic_a0", &[("n", 0, 120)]),
            ("cubic_ainf", &[("n", 0, 120)]),
        ];
        let plan = Plan {
            instances: grids
                .iter()
                .map(|(id, ranges)| PlanInstance {
                    id: id.to_string(),
                    params: ranges
                        .iter()
                        .map(|&(n, lo, hi)| (n.to_string(), [lo, hi]))
                        .collect::<BTreeMap<_, _>>(),
                })
                .collect(),
            threads: 0,
        };
        let start = Instant::now();
        let report = run_plan(&plan, false).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if report.results.len() != 1033 {
            return Err(format!(
                "expected 1033 instances, expanded {}",
                report.results.len()
            ));
        }
        if let Some(bad) = report.results.iter().find(|r| r.status != "equal") {
            return Err(format!(
                "{} at {:?} has status {}",
                bad.id, bad.params, bad.status
            ));
        }
        // The two series with a vanishing residue class really produce the
        // zero polynomial there (equal sides with zero terms).
        for r in &report.results {
            if (r.id == "cubic_a0" || r.id == "cubic_ainf")
                && r.params["n"].rem_euclid(3) == 2
                && r.lhs_term_count != 0
            {
                return Err(format!("{} n={} is not zero", r.id, r.params["n"]));
            }
        }
        // The single-sum form of id2b collapses to the id2 left side.
        for l in 0..=25 {
            let single = id2b_single_sum(l).map_err(|e| e.to_string())?;
            let double =
                evaluate_side("id2", Side::Lhs, &params(&[("L", l)])).map_err(|e| e.to_string())?;
            if single != double.poly {
                return Err(format!("id2b single-sum form differs from id2 at L={l}"));
            }
        }
        if elapsed > Duration::from_secs(300) {
            return Err(format!("sweep exceeded 5 minutes: {elapsed:?}"));
        }
        Ok(format!(
            "1033 instances across 22 entries all equal in {:.1}s",
            elapsed.as_secs_f64()
        ))
    });
}

#[test]
fn criterion_2_spot_values() {
    criterion(2, || {
        for (id, size, want_one) in [("id3", 2, true), ("id4", 1, true), ("id1", 1, false)] {
            let p = params(&[("L", size)]);
            let outcome = verify_instance(id, &p, false).map_err(|e| e.to_string())?;
            if outcome.status != InstanceStatus::Equal {
                return Err(format!("{id} at L={size} is {}", outcome.status.as_str()));
            }
            if want_one {
                for side in [Side::Lhs, Side::Rhs] {
                    let eval = evaluate_side(id, side, &p).map_err(|e| e.to_string())?;
                    if !eval.poly.is_one() {
                        return Err(format!("{id} at L={size} has a side {}", eval.poly));
                    }
                }
            }
        }
        let lhs =
            evaluate_side("id1", Side::Lhs, &params(&[("L", 1)])).map_err(|e| e.to_string())?;
        let expected = "1 + 1*q*z^-1 - 1*q + 1*q*z";
        if lhs.poly.to_string() != expected {
            return Err(format!("id1 L=1 left side is {}", lhs.poly));
        }
        Ok(format!(
            "id3(L=2) and id4(L=1) both sides 1; id1(L=1) lhs = {expected}"
        ))
    });
}

#[test]
fn criterion_3_reduction_chain() {
    criterion(3, || {
        for id in [
            "id1b_to_id1",
            "id1c_to_id1",
            "bn_c_to_bn",
            "bn_assembles_id1",
        ] {
            let r = reduction(id).map_err(|e| e.to_string())?;
            for size in 0..=10 {
                (r.check)(size).map_err(|e| format!("{id} at {size}: {e}"))?;
            }
        }
        Ok("three c=0 specializations and the assembly hold for sizes 0..=10".to_string())
    });
}

#[test]
fn criterion_4_summand_antisymmetry() {
    criterion(4, || {
        let mut checked = 0u64;
        for l in 0..=10 {
            for i in 0..=l {
                for j in 0..=l {
                    for k in 0..=l {
                        let direct = id2_rhs_summand(l, i, j, k);
                        let swapped = id2_rhs_summand(l, j, i, k);
                        let expected = if (i + j) % 2 == 1 {
                            swapped.neg()
                        } else {
                            swapped
                        };
                        if direct != expected {
                            return Err(format!(
                                "summand sign relation fails at L={l} (i,j,k)=({i},{j},{k})"
                            ));
                        }
                        checked += 1;
                    }
                }
            }
        }
        Ok(format!(
            "swap antisymmetry holds termwise for L <= 10 ({checked} triples)"
        ))
    });
}

#[test]
fn criterion_5_limit_suites() {
    criterion(5, || {
        for (suite, degree) in [
            ("pentagonal", 200),
            ("triple_product", 60),
            ("lebesgue", 40),
            ("stabilization", 30),
        ] {
            let outcome = run_suite(suite, degree).map_err(|e| e.to_string())?;
            if let Some(c) = outcome.checks.iter().find(|c| !c.pass) {
                return Err(format!("{suite} degree {degree}: {} failed", c.name));
            }
        }
        Ok(
            "pentagonal(200), triple_product(60), lebesgue(40), stabilization(30) all exact"
                .to_string(),
        )
    });
}

#[test]
fn criterion_6_bench_counts_and_ratio() {
    criterion(6, || {
        let rows = bench("id1", 25).map_err(|e| e.to_string())?;
        for row in &rows {
            if Some(row.rhs_summands) != row.analytic_rhs {
                return Err(format!(
                    "L={}: measured {} vs analytic {:?}",
                    row.l, row.rhs_summands, row.analytic_rhs
                ));
            }
        }
        // Strict monotonicity of rhs/lhs checked by exact cross-multiplication.
        for pair in rows[5..].windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if (b.rhs_summands as u128) * (a.lhs_summands as u128)
                <= (a.rhs_summands as u128) * (b.lhs_summands as u128)
            {
                return Err(format!("ratio not strictly increasing at L={}", b.l));
            }
        }
        Ok(
            "triple counts match the closed form for L <= 25; ratio strictly increasing on [5, 25]"
                .to_string(),
        )
    });
}

#[test]
fn criterion_7_negative_control() {
    criterion(7, || {
        let outcome =
            verify_instance("id1", &params(&[("L", 3)]), true).map_err(|e| e.to_string())?;
        if outcome.status != InstanceStatus::Mismatch {
            return Err(format!("corrupt status is {}", outcome.status.as_str()));
        }
        match &outcome.difference {
            Some(d) if !d.is_zero() => {}
            other => return Err(format!("difference is {other:?}")),
        }
        let run = std::process::Command::new(env!("CARGO_BIN_EXE_qid"))
            .args(["verify", "--id", "id1", "--param", "L=3", "--corrupt"])
            .output()
            .map_err(|e| e.to_string())?;
        if run.status.code() != Some(1) {
            return Err(format!("corrupt exit code {:?}", run.status.code()));
        }
        Ok("corrupt hook yields mismatch, nonzero difference, exit code 1".to_string())
    });
}

// ---------------------------------------------------------------------------
// Criterion 8: randomized property suites, >= 1000 cases each.
// ---------------------------------------------------------------------------

fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((prop::array::uniform5(-6i64..=6), -9i64..=9), 0..=6).prop_map(|terms| {
        LaurentPolynomial::from_terms(
            terms
                .into_iter()
                .map(|(exps, c)| (ExponentVector::from_exps(exps), BigInt::from(c))),
        )
    })
}

fn run_cases<S: Strategy>(
    name: &str,
    strategy: S,
    check: impl Fn(&S::Value) -> Result<(), String>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, |value| {
            check(&value).map_err(proptest::test_runner::TestCaseError::fail)
        })
        .map_err(|e| format!("{name}: {e}"))
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

#[test]
fn criterion_8_property_suites() {
    criterion(8, || {
        run_cases("ring axioms", (poly(), poly(), poly()), |(a, b, c)| {
            ensure(a.add(b) == b.add(a), "addition commutes")?;
            ensure(a.add(b).add(c) == a.add(&b.add(c)), "addition associates")?;
            ensure(a.mul(b) == b.mul(a), "multiplication commutes")?;
            ensure(
                a.mul(b).mul(c) == a.mul(&b.mul(c)),
                "multiplication associates",
            )?;
            ensure(
                a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c)),
                "multiplication distributes",
            )?;
            ensure(a.add(&a.neg()).is_zero(), "additive inverse")?;
            ensure(
                &a.mul(&LaurentPolynomial::one()) == a,
                "multiplicative identity",
            )
        })?;
        run_cases(
            "exact division round-trip",
            (
                poly(),
                poly().prop_filter("nonzero divisor", |b| !b.is_zero()),
            ),
            |(a, b)| match a.mul(b).exact_div(b) {
                Ok(q) => ensure(&q == a, "quotient differs from the original"),
                Err(e) => Err(format!("division failed: {e}")),
            },
        )?;
        run_cases(
            "q-binomial and Pochhammer laws",
            (0i64..=25, 0i64..=25, 1i64..=3, 0i64..=10, 0i64..=10),
            |&(n, k, base_exp, m1, m2)| {
                let sym = q_binomial(n, n - k, base_exp);
                ensure(
                    q_binomial(n, k, base_exp).as_ref() == sym.as_ref(),
                    "symmetry",
                )?;
                if n >= 1 {
                    let current = q_binomial(n, k, base_exp);
                    let low = q_binomial(n - 1, k - 1, base_exp);
                    let high = q_binomial(n - 1, k, base_exp);
                    let shift = |p: &LaurentPolynomial, e: i64| {
                        p.mul(&LaurentPolynomial::var_pow(Variable::Q, e))
                    };
                    ensure(
                        current.as_ref() == &low.add(&shift(&high, base_exp * k)),
                        "first Pascal recurrence",
                    )?;
                    ensure(
                        current.as_ref() == &shift(&low, base_exp * (n - k)).add(&high),
                        "second Pascal recurrence",
                    )?;
                }
                let base = SignedMonomial::q_pow(1);
                let shifted = SignedMonomial::q_pow(1 + m1);
                ensure(
                    pochhammer(&base, m1 + m2)
                        == pochhammer(&base, m1).mul(&pochhammer(&shifted, m2)),
                    "Pochhammer multiplicativity",
                )
            },
        )?;
        run_cases(
            "rational-point precheck consistency",
            (poly(), poly(), any::<u64>()),
            |(a, b, seed)| {
                ensure(
                    rational_precheck(a, a, *seed, 3).map_err(|e| e.to_string())?,
                    "precheck rejects equal polynomials",
                )?;
                if !rational_precheck(a, b, *seed, 3).map_err(|e| e.to_string())? {
                    ensure(a != b, "precheck separated equal polynomials")?;
                }
                Ok(())
            },
        )?;
        Ok(
            "ring axioms, exact division, q-binomial/Pochhammer laws, precheck: 1000 cases each"
                .to_string(),
        )
    });
}
