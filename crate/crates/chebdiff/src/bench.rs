//! Wall-clock comparison of the closed-form derivative against the
//! differentiate-then-re-expand baseline.
//!
//! Timings are only ever reported for runs where the two paths produced
//! bit-identical expansions: [`run_bench`] checks equality at every degree
//! and returns an error instead of a report on the first mismatch.

use std::time::{Duration, Instant};

use crate::deriv::{derivative_oracle, u_derivative_explicit};
use crate::poly::{monomial_to_u, ChebBasis};
use crate::Error;

/// Measurements for a single degree.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    /// Time for the closed-form expansion.
    pub explicit: Duration,
    /// Time for monomial differentiation plus re-expansion into U.
    pub oracle: Duration,
}

/// All rows of one run. Holding a report implies every equality check
/// passed; a mismatch aborts the run before any timing escapes.
#[derive(Clone, Debug)]
pub struct BenchReport {
    /// Derivative order shared by all rows.
    pub order: usize,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// CSV-style table with millisecond timings.
    pub fn to_table(&self) -> String {
        let mut out = String::from("n,explicit_ms,oracle_ms\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{:.3},{:.3}\n",
                row.n,
                row.explicit.as_secs_f64() * 1e3,
                row.oracle.as_secs_f64() * 1e3,
            ));
        }
        out
    }
}

/// Degrees measured for a run: a doubling ladder from max(s, 1) strictly
/// below n_max, then n_max itself. Never empty, never repeats a degree.
pub fn bench_ladder(n_max: usize, s: usize) -> Vec<usize> {
    let mut degrees = Vec::new();
    let mut n = s.max(1);
    while n < n_max {
        degrees.push(n);
        n *= 2;
    }
    degrees.push(n_max);
    degrees
}

/// Time both derivative paths of order s over [`bench_ladder`] degrees,
/// checking exact equality of the results at every step.
///
/// Requires n_max >= s so the top row has a nonempty derivative.
pub fn run_bench(n_max: usize, s: usize) -> Result<BenchReport, Error> {
    if n_max < s {
        return Err(Error::InvalidArgument(format!(
            "bench requires n_max >= s, got n_max = {n_max}, s = {s}"
        )));
    }
    let mut rows = Vec::new();
    for n in bench_ladder(n_max, s) {
        let started = Instant::now();
        let closed_form = u_derivative_explicit(n, s);
        let explicit = started.elapsed();

        let started = Instant::now();
        let baseline = monomial_to_u(&derivative_oracle(n, s, ChebBasis::SecondKind));
        let oracle = started.elapsed();

        if closed_form != baseline {
            return Err(Error::BenchMismatch { n, s });
        }
        rows.push(BenchRow {
            n,
            explicit,
            oracle,
        });
    }
    Ok(BenchReport { order: s, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_doubles_and_caps_at_n_max() {
        assert_eq!(bench_ladder(8, 1), vec![1, 2, 4, 8]);
        assert_eq!(bench_ladder(10, 1), vec![1, 2, 4, 8, 10]);
        assert_eq!(bench_ladder(64, 3), vec![3, 6, 12, 24, 48, 64]);
        assert_eq!(bench_ladder(4, 4), vec![4]);
        assert_eq!(bench_ladder(8, 0), vec![1, 2, 4, 8]);
        assert_eq!(bench_ladder(0, 0), vec![0]);
    }

    #[test]
    fn run_reports_every_ladder_degree() {
        let report = run_bench(32, 2).unwrap();
        assert_eq!(report.order, 2);
        let degrees: Vec<usize> = report.rows.iter().map(|r| r.n).collect();
        assert_eq!(degrees, bench_ladder(32, 2));
    }

    #[test]
    fn run_rejects_n_max_below_s() {
        assert!(matches!(run_bench(3, 4), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn table_has_one_line_per_row_plus_header() {
        let report = run_bench(16, 1).unwrap();
        let table = report.to_table();
        let mut lines = table.lines();
        assert_eq!(lines.next(), Some("n,explicit_ms,oracle_ms"));
        assert_eq!(lines.count(), report.rows.len());
        assert!(table.ends_with('\n'));
    }
}
