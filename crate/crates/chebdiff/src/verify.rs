//! Exhaustive identity sweeps with machine-readable counterexample reports.
//!
//! Each suite enumerates a parameter range in lexicographic order and
//! compares two independently computed exact values, so any recorded failure
//! is a genuine counterexample, never numerical noise. Reports serialize to
//! JSON for the CLI and the C ABI.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combinatorics::ExactRational;
use crate::deriv::{
    derivative_oracle, inner_sum_pair, t_derivative_explicit, u_derivative_explicit,
    u_derivative_triple_sum,
};
use crate::poly::{expansion_to_monomial, monomial_power_to_u, ChebBasis, MonomialPoly};

/// One failed case: the parameters to reproduce it plus both values,
/// serialized canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: BTreeMap<String, u64>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one identity sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    suite: String,
    cases: u64,
    failures: Vec<Failure>,
    elapsed_ms: u64,
}

impl VerificationReport {
    pub fn suite(&self) -> &str {
        &self.suite
    }

    /// Number of cases enumerated (passing and failing).
    pub fn cases_run(&self) -> u64 {
        self.cases
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.elapsed_ms
    }

    /// A sweep with no recorded failures is a pass.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Accumulator for one sweep; `detail` closures are only rendered for
/// failing cases, so passing sweeps never pay for formatting.
struct Sweep {
    suite: String,
    cases: u64,
    failures: Vec<Failure>,
    started: Instant,
}

impl Sweep {
    fn new(suite: &str) -> Self {
        Sweep {
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    fn case(
        &mut self,
        params: &[(&str, u64)],
        ok: bool,
        detail: impl FnOnce() -> (String, String),
    ) {
        self.cases += 1;
        if !ok {
            let (expected, actual) = detail();
            self.failures.push(Failure {
                params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
                expected,
                actual,
            });
        }
    }

    fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            cases: self.cases,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("canonical forms always serialize")
}

/// Check the U closed form against the monomial-route oracle for every
/// 0 <= s <= n <= n_max: (n_max+1)(n_max+2)/2 cases.
pub fn verify_u_explicit(n_max: usize) -> VerificationReport {
    let mut sweep = Sweep::new("u-explicit");
    for n in 0..=n_max {
        for s in 0..=n {
            let actual = expansion_to_monomial(&u_derivative_explicit(n, s));
            let expected = derivative_oracle(n, s, ChebBasis::SecondKind);
            sweep.case(
                &[("n", n as u64), ("s", s as u64)],
                actual == expected,
                || (json(&expected), json(&actual)),
            );
        }
    }
    sweep.finish()
}

/// Check the T closed form against the monomial-route oracle for every
/// 0 <= s <= n <= n_max.
pub fn verify_t_explicit(n_max: usize) -> VerificationReport {
    let mut sweep = Sweep::new("t-explicit");
    for n in 0..=n_max {
        for s in 0..=n {
            let actual = expansion_to_monomial(&t_derivative_explicit(n, s));
            let expected = derivative_oracle(n, s, ChebBasis::FirstKind);
            sweep.case(
                &[("n", n as u64), ("s", s as u64)],
                actual == expected,
                || (json(&expected), json(&actual)),
            );
        }
    }
    sweep.finish()
}

/// Check that expanding x^j into the U basis and substituting the monomial
/// forms back recovers exactly x^j, for 0 <= j <= j_max.
pub fn verify_inversion(j_max: usize) -> VerificationReport {
    let mut sweep = Sweep::new("inversion");
    for j in 0..=j_max {
        let actual = expansion_to_monomial(&monomial_power_to_u(j));
        let expected = MonomialPoly::from_terms([(j, ExactRational::one())]);
        sweep.case(&[("j", j as u64)], actual == expected, || {
            (json(&expected), json(&actual))
        });
    }
    sweep.finish()
}

/// Check both sides of the collapsed inner-sum identity on every valid
/// triple: 1 <= s <= n <= n_max, 0 <= j <= (n-s)/2.
pub fn verify_inner_sum(n_max: usize) -> VerificationReport {
    let mut sweep = Sweep::new("inner-sum");
    for n in 1..=n_max {
        for s in 1..=n {
            for j in 0..=(n - s) / 2 {
                let case =
                    inner_sum_pair(n, s, j).expect("enumerated triples are valid by construction");
                sweep.case(
                    &[("n", n as u64), ("s", s as u64), ("j", j as u64)],
                    case.holds(),
                    || (case.lhs.to_string(), case.rhs.to_string()),
                );
            }
        }
    }
    sweep.finish()
}

/// Check the uncollapsed double sum against the closed form for every
/// 1 <= s <= n <= n_max: n_max(n_max+1)/2 cases.
pub fn verify_triple_sum(n_max: usize) -> VerificationReport {
    let mut sweep = Sweep::new("triple-sum");
    for n in 1..=n_max {
        for s in 1..=n {
            let expected = u_derivative_explicit(n, s);
            let actual = u_derivative_triple_sum(n, s);
            sweep.case(
                &[("n", n as u64), ("s", s as u64)],
                actual == expected,
                || (json(&expected), json(&actual)),
            );
        }
    }
    sweep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_sweep_counts_and_passes() {
        let report = verify_u_explicit(16);
        assert_eq!(report.suite(), "u-explicit");
        assert_eq!(report.cases_run(), 17 * 18 / 2);
        assert!(report.passed());
        assert!(report.failures().is_empty());
    }

    #[test]
    fn t_sweep_counts_and_passes() {
        let report = verify_t_explicit(16);
        assert_eq!(report.cases_run(), 17 * 18 / 2);
        assert!(report.passed());
    }

    #[test]
    fn inversion_sweep_counts_and_passes() {
        let report = verify_inversion(32);
        assert_eq!(report.cases_run(), 33);
        assert!(report.passed());
    }

    #[test]
    fn inner_sum_sweep_enumerates_all_valid_triples() {
        let report = verify_inner_sum(12);
        let mut expected_cases = 0u64;
        for n in 1..=12u64 {
            for s in 1..=n {
                expected_cases += (n - s) / 2 + 1;
            }
        }
        assert_eq!(report.cases_run(), expected_cases);
        assert!(report.passed());
    }

    #[test]
    fn triple_sum_sweep_counts_and_passes() {
        let report = verify_triple_sum(12);
        assert_eq!(report.cases_run(), 12 * 13 / 2);
        assert!(report.passed());
    }

    #[test]
    fn sweep_records_failures_with_parameters() {
        // Drive the accumulator directly with one artificial mismatch to pin
        // the failure payload format end to end.
        let mut sweep = Sweep::new("demo");
        sweep.case(&[("n", 3), ("s", 1)], true, || unreachable!());
        sweep.case(&[("n", 4), ("s", 2)], false, || {
            ("lhs-value".to_string(), "rhs-value".to_string())
        });
        let report = sweep.finish();
        assert_eq!(report.cases_run(), 2);
        assert!(!report.passed());
        assert_eq!(report.failures().len(), 1);
        let failure = &report.failures()[0];
        assert_eq!(failure.params.get("n"), Some(&4));
        assert_eq!(failure.params.get("s"), Some(&2));
        assert_eq!(failure.expected, "lhs-value");
        assert_eq!(failure.actual, "rhs-value");
    }

    #[test]
    fn report_json_shape() {
        let mut sweep = Sweep::new("demo");
        sweep.case(&[("j", 7)], false, || ("1".to_string(), "2".to_string()));
        let mut report = sweep.finish();
        report.elapsed_ms = 5; // deterministic golden
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"suite":"demo","cases":1,"failures":[{"params":{"j":7},"expected":"1","actual":"2"}],"elapsed_ms":5}"#
        );
        let back: VerificationReport =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(back, report);
    }
}
