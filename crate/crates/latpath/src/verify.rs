//! Named batteries that re-run every invariant the library claims, at
//! desk-scale defaults, and fold the outcomes into a single report.
//! Failures are data, never panics: each failed case carries its id,
//! inputs, and the expected/actual pair, so a broken hypothesis is
//! diagnosable from the report alone.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::constrained::{
    count_constrained, lambda_derived, partitions_in_box, sagan_sequence, scan_simion, Partition,
};
use crate::counting::{
    binomial, count_four_step, count_four_step_upper, count_two_step, product_sequence,
    upper_product_sequence,
};
use crate::error::Error;
use crate::lattice::{enumerate, PathFamily, Point};
use crate::qpoly::{
    check_gessel_catalan, check_legendre_identity, diag_antidiagonal_sequence, diag_polynomial,
    diag_polynomial_oracle,
};
use crate::reflection::{perpendicular_bisector, verify_injection, ReflectionLine};
use crate::sequences::{is_q_unimodal, is_unimodal, mode_indices};

/// Which battery to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Binomial,
    FourStep,
    QPoly,
    Simion,
}

impl Scope {
    pub const ALL_NAMES: [&'static str; 5] = ["all", "binomial", "four-step", "qpoly", "simion"];
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::All => "all",
            Scope::Binomial => "binomial",
            Scope::FourStep => "four-step",
            Scope::QPoly => "qpoly",
            Scope::Simion => "simion",
        })
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(Scope::All),
            "binomial" => Ok(Scope::Binomial),
            "four-step" => Ok(Scope::FourStep),
            "qpoly" => Ok(Scope::QPoly),
            "simion" => Ok(Scope::Simion),
            other => Err(Error::Parse(format!(
                "unknown scope {other:?} (expected one of {})",
                Scope::ALL_NAMES.join(", ")
            ))),
        }
    }
}

/// One failed case: what was asked, and both sides of the disagreement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFailure {
    pub case_id: String,
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

/// Aggregate outcome of a battery run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite_name: String,
    pub cases_run: u64,
    pub cases_passed: u64,
    pub failures: Vec<CaseFailure>,
    pub wall_time_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Case collector; a case passes iff its expected and actual strings agree.
struct Collector {
    cases_run: u64,
    failures: Vec<CaseFailure>,
}

impl Collector {
    fn new() -> Self {
        Collector {
            cases_run: 0,
            failures: Vec::new(),
        }
    }

    fn record(
        &mut self,
        case_id: impl Into<String>,
        inputs: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) {
        self.cases_run += 1;
        let (expected, actual) = (expected.into(), actual.into());
        if expected != actual {
            self.failures.push(CaseFailure {
                case_id: case_id.into(),
                inputs: inputs.into(),
                expected,
                actual,
            });
        }
    }

    fn expect_true(&mut self, case_id: impl Into<String>, inputs: impl Into<String>, ok: bool) {
        self.record(case_id, inputs, "true", ok.to_string());
    }

    fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        case_id: impl Into<String>,
        inputs: impl Into<String>,
        expected: &T,
        actual: &T,
    ) {
        self.record(case_id, inputs, expected.to_string(), actual.to_string());
    }
}

fn seq_string(s: &[BigInt]) -> String {
    s.iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Run the scoped battery. `n_max` overrides every size bound inside the
/// battery at once (the advertised sizes are the defaults); passing a
/// large value can push enumerations past the step budget, which shows up
/// as failed cases rather than errors.
pub fn verify_suite(scope: Scope, n_max: Option<u64>) -> VerifyReport {
    let start = Instant::now();
    let mut c = Collector::new();
    match scope {
        Scope::All => {
            binomial_battery(&mut c, n_max);
            four_step_battery(&mut c, n_max);
            qpoly_battery(&mut c, n_max);
            simion_battery(&mut c, n_max);
        }
        Scope::Binomial => binomial_battery(&mut c, n_max),
        Scope::FourStep => four_step_battery(&mut c, n_max),
        Scope::QPoly => qpoly_battery(&mut c, n_max),
        Scope::Simion => simion_battery(&mut c, n_max),
    }
    VerifyReport {
        suite_name: scope.to_string(),
        cases_run: c.cases_run,
        cases_passed: c.cases_run - c.failures.len() as u64,
        failures: c.failures,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

/// Binomial rows: unimodality, the two-step enumeration oracle, the
/// row-to-row reflection injection, and the midpoint log-concavity that
/// falls out of product-sequence unimodality.
fn binomial_battery(c: &mut Collector, n_max: Option<u64>) {
    let rows = n_max.unwrap_or(60) as i64;
    for n in 0..=rows {
        let row: Vec<BigInt> = (0..=n).map(|k| binomial(n, k).unwrap()).collect();
        c.expect_true(
            format!("binomial-row-unimodal/n={n}"),
            format!("n={n}"),
            is_unimodal(&row),
        );
    }

    let oracle = n_max.unwrap_or(12) as i64;
    for total in 0..=oracle {
        for i in 0..=total {
            let j = total - i;
            let id = format!("two-step-oracle/i={i}&j={j}");
            let inputs = format!("i={i}, j={j}");
            match enumerate(&PathFamily::TwoStep { i, j }) {
                Ok(paths) => c.expect_eq(
                    id,
                    inputs,
                    &count_two_step(i, j),
                    &BigInt::from(paths.len()),
                ),
                Err(e) => c.record(id, inputs, "enumerable", format!("error: {e}")),
            }
        }
    }

    let inj = n_max.unwrap_or(12) as i64;
    for n in 0..=inj {
        for k in 0..(n + 1) / 2 {
            let (v, w) = (Point::new(k, n - k), Point::new(k + 1, n - k - 1));
            let id = format!("binomial-injection/n={n}&k={k}");
            let inputs = format!("n={n}, k={k}");
            let outcome = perpendicular_bisector(v, w).and_then(|line| {
                verify_injection(
                    &PathFamily::TwoStep { i: k, j: n - k },
                    &PathFamily::TwoStep {
                        i: k + 1,
                        j: n - k - 1,
                    },
                    line,
                )
            });
            match outcome {
                Ok(report) => c.expect_true(id, inputs, report.holds()),
                Err(e) => c.record(id, inputs, "true", format!("error: {e}")),
            }
        }
    }

    let mid = n_max.unwrap_or(40) as i64;
    for n in 1..=mid {
        let ok = (1..n).all(|k| {
            let seq = product_sequence(n as u64, 2 * k as u64);
            let k = k as usize;
            // The sequence's middle terms are exactly the two sides of
            // the row-n log-concavity inequality at k.
            seq[k - 1] == binomial(n, k as i64 - 1).unwrap() * binomial(n, k as i64 + 1).unwrap()
                && seq[k] == binomial(n, k as i64).unwrap().pow(2)
                && seq[k - 1] <= seq[k]
        });
        c.expect_true(
            format!("product-midpoint-log-concave/n={n}"),
            format!("n={n}"),
            ok,
        );
    }
}

/// Four-step walks: closed forms against the enumeration oracle, product
/// sequences (unimodal, and nonnegative in the upper variant), and the
/// endpoint-shifting vertical-line injections, plain and upper.
fn four_step_battery(c: &mut Collector, n_max: Option<u64>) {
    let oracle = n_max.unwrap_or(10) as i64;
    for n in 0..=oracle {
        for i in -n..=n {
            for j in -n..=n {
                let inputs = format!("i={i}, j={j}, n={n}");
                match enumerate(&PathFamily::FourStep { i, j, n }) {
                    Ok(paths) => c.expect_eq(
                        format!("four-step-oracle/i={i}&j={j}&n={n}"),
                        inputs.clone(),
                        &count_four_step(i, j, n),
                        &BigInt::from(paths.len()),
                    ),
                    Err(e) => c.record(
                        format!("four-step-oracle/i={i}&j={j}&n={n}"),
                        inputs.clone(),
                        "enumerable",
                        format!("error: {e}"),
                    ),
                }
                match enumerate(&PathFamily::FourStepUpper { i, j, n }) {
                    Ok(paths) => c.expect_eq(
                        format!("four-step-upper-oracle/i={i}&j={j}&n={n}"),
                        inputs,
                        &count_four_step_upper(i, j, n),
                        &BigInt::from(paths.len()),
                    ),
                    Err(e) => c.record(
                        format!("four-step-upper-oracle/i={i}&j={j}&n={n}"),
                        inputs,
                        "enumerable",
                        format!("error: {e}"),
                    ),
                }
            }
        }
    }

    let products = n_max.unwrap_or(40);
    for n in 0..=products {
        for l in 0..=(2 * n) {
            let plain = product_sequence(n, l);
            let upper = upper_product_sequence(n, l);
            let ok = is_unimodal(&plain)
                && is_unimodal(&upper)
                && upper.iter().all(|t| t >= &BigInt::zero());
            c.record(
                format!("product-sequence-unimodal/n={n}&l={l}"),
                format!("n={n}, l={l}"),
                "unimodal, upper unimodal and nonnegative",
                if ok {
                    "unimodal, upper unimodal and nonnegative".to_string()
                } else {
                    format!("plain={} upper={}", seq_string(&plain), seq_string(&upper))
                },
            );
        }
    }

    let inj = n_max.unwrap_or(10) as i64;
    for n in 0..=inj {
        for i in [-2i64, -1] {
            for j in -n..=n {
                let line = ReflectionLine::Vertical { two_c: 2 * (i + 1) };
                let inputs = format!("i={i}, j={j}, n={n}");
                let plain = verify_injection(
                    &PathFamily::FourStep { i, j, n },
                    &PathFamily::FourStep { i: i + 2, j, n },
                    line,
                );
                match plain {
                    Ok(report) => c.expect_true(
                        format!("four-step-injection/i={i}&j={j}&n={n}"),
                        inputs.clone(),
                        report.holds(),
                    ),
                    Err(e) => c.record(
                        format!("four-step-injection/i={i}&j={j}&n={n}"),
                        inputs.clone(),
                        "true",
                        format!("error: {e}"),
                    ),
                }
                if j >= 0 {
                    let upper = verify_injection(
                        &PathFamily::FourStepUpper { i, j, n },
                        &PathFamily::FourStepUpper { i: i + 2, j, n },
                        line,
                    );
                    match upper {
                        Ok(report) => c.expect_true(
                            format!("four-step-upper-injection/i={i}&j={j}&n={n}"),
                            inputs,
                            report.holds(),
                        ),
                        Err(e) => c.record(
                            format!("four-step-upper-injection/i={i}&j={j}&n={n}"),
                            inputs,
                            "true",
                            format!("error: {e}"),
                        ),
                    }
                }
            }
        }
    }
}

/// Diagonal-step polynomials: trinomial formula against the enumeration
/// oracle, symmetry, q-unimodality of the anti-diagonal sequences with
/// centered per-coefficient peaks, and the Legendre/Catalan evaluations.
fn qpoly_battery(c: &mut Collector, n_max: Option<u64>) {
    let oracle = n_max.unwrap_or(10) as i64;
    for total in 0..=oracle {
        for i in 0..=total {
            let j = total - i;
            let id = format!("diag-oracle/i={i}&j={j}");
            let inputs = format!("i={i}, j={j}");
            match diag_polynomial_oracle(i, j) {
                Ok(byenum) => c.expect_eq(id, inputs, &diag_polynomial(i, j), &byenum),
                Err(e) => c.record(id, inputs, "enumerable", format!("error: {e}")),
            }
        }
    }

    let sym = n_max.unwrap_or(20) as i64;
    for i in 0..=sym {
        for j in 0..i {
            c.expect_eq(
                format!("diag-symmetry/i={i}&j={j}"),
                format!("i={i}, j={j}"),
                &diag_polynomial(i, j),
                &diag_polynomial(j, i),
            );
        }
    }

    let anti = n_max.unwrap_or(20);
    for n in 0..=anti {
        let seq = diag_antidiagonal_sequence(n);
        c.expect_true(
            format!("diag-antidiagonal-q-unimodal/n={n}"),
            format!("n={n}"),
            is_q_unimodal(&seq),
        );

        // Every fixed-power coefficient slice must be unimodal with a
        // peak at one of the two central positions.
        let degree = seq.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
        let (lo, hi) = ((n / 2) as usize, n.div_ceil(2) as usize);
        let centered = (0..=degree).all(|d| {
            let slice: Vec<BigInt> = seq.iter().map(|p| p.coeff(d)).collect();
            is_unimodal(&slice)
                && mode_indices(&slice)
                    .map(|modes| modes.contains(&lo) || modes.contains(&hi))
                    .unwrap_or(false)
        });
        c.expect_true(
            format!("diag-slice-peaks-centered/n={n}"),
            format!("n={n}"),
            centered,
        );
    }

    let leg = n_max.unwrap_or(20);
    for n in 0..=leg {
        c.expect_true(
            format!("legendre-identity/n={n}"),
            format!("n={n}"),
            check_legendre_identity(n),
        );
    }

    let gessel = n_max.unwrap_or(6);
    for n in 1..=gessel {
        let report = check_gessel_catalan(n);
        c.record(
            format!("gessel-catalan-member/n={n}"),
            format!(
                "n={n}, value={}, matched_index={:?}",
                report.value, report.matched_index
            ),
            "member",
            if report.is_catalan_member {
                "member".to_string()
            } else {
                format!("{} not among C_0..C_{}", report.value, 4 * n)
            },
        );
    }
}

/// Constrained families: the λ=(1) closed form, DP against enumeration
/// for every partition in the box, unimodality of the position-dependent
/// sequences, the proof's step-to-step injection, and the conjecture scan.
fn simion_battery(c: &mut Collector, n_max: Option<u64>) {
    let one = Partition::new(vec![1]).unwrap();
    let closed = n_max.unwrap_or(12) as i64;
    for total in 0..=closed {
        for i in 0..=total {
            let j = total - i;
            let expected = binomial(total, i).unwrap() - 1;
            c.expect_eq(
                format!("single-cell-closed-form/i={i}&j={j}"),
                format!("i={i}, j={j}, lambda=1"),
                &expected,
                &count_constrained(i, j, &one),
            );
        }
    }

    let dp = n_max.unwrap_or(10) as i64;
    for total in 0..=dp {
        for i in 0..=total {
            let j = total - i;
            let id = format!("constrained-dp-oracle/i={i}&j={j}");
            let inputs = format!("i={i}, j={j}, all lambda in box");
            let mut verdict = "all match".to_string();
            'lambdas: for lambda in partitions_in_box(i as u64, j as u64) {
                let fam = PathFamily::Constrained {
                    i,
                    j,
                    lambda: lambda.clone(),
                };
                match enumerate(&fam) {
                    Ok(paths) => {
                        let dp_count = count_constrained(i, j, &lambda);
                        if dp_count != BigInt::from(paths.len()) {
                            verdict = format!(
                                "lambda={lambda}: dp={dp_count}, enumeration={}",
                                paths.len()
                            );
                            break 'lambdas;
                        }
                    }
                    Err(e) => {
                        verdict = format!("lambda={lambda}: error: {e}");
                        break 'lambdas;
                    }
                }
            }
            c.record(id, inputs, "all match", verdict);
        }
    }

    let sagan_n = n_max.unwrap_or(10);
    for lambda in partitions_in_box(4, 4) {
        for n in 0..=sagan_n {
            let seq = sagan_sequence(&lambda, n);
            c.record(
                format!("sagan-unimodal/lambda={lambda}&n={n}"),
                format!("lambda={lambda}, n={n}"),
                "unimodal",
                if is_unimodal(&seq) {
                    "unimodal".to_string()
                } else {
                    seq_string(&seq)
                },
            );
        }
    }

    let proof_n = n_max.unwrap_or(8) as i64;
    for lambda in partitions_in_box(3, 3) {
        for n in 0..=proof_n {
            let derived = lambda_derived(&lambda, n as u64);
            for k in 0..(n + 1) / 2 {
                let (v, w) = (Point::new(k, n - k), Point::new(k + 1, n - k - 1));
                let id = format!("constrained-injection/lambda={lambda}&n={n}&k={k}");
                let inputs = format!("lambda={lambda}, n={n}, k={k}");
                let outcome = perpendicular_bisector(v, w).and_then(|line| {
                    verify_injection(
                        &PathFamily::Constrained {
                            i: k,
                            j: n - k,
                            lambda: derived[k as usize].clone(),
                        },
                        &PathFamily::Constrained {
                            i: k + 1,
                            j: n - k - 1,
                            lambda: derived[k as usize + 1].clone(),
                        },
                        line,
                    )
                });
                match outcome {
                    Ok(report) => c.expect_true(id, inputs, report.holds()),
                    Err(e) => c.record(id, inputs, "true", format!("error: {e}")),
                }
            }
        }
    }

    let scan_n = n_max.unwrap_or(10);
    let scan = scan_simion(4, 4, scan_n);
    c.record(
        format!("simion-scan/max_part=4&max_rows=4&n_max={scan_n}"),
        format!("max_part=4, max_rows=4, n_max={scan_n}"),
        "no failures",
        if scan.passed() {
            "no failures".to_string()
        } else {
            format!("{} failures", scan.failures.len())
        },
    );
}
