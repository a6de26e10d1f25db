//! Acceptance suite: one test per shipping criterion, each printing a
//! single PASS/FAIL line (run with `--nocapture` to see them).

use chebdiff::{
    run_bench, u_derivative_explicit, verify_inner_sum, verify_inversion, verify_t_explicit,
    verify_triple_sum, verify_u_explicit, ChebBasis, ChebExpansion, DiffMatrix, ExactInt,
    ExactRational, VerificationReport,
};
use num_traits::One;

/// Print the criterion verdict, then enforce it.
fn criterion(name: &str, ok: bool, detail: String) {
    println!("acceptance: {name}: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

fn sweep_criterion(name: &str, report: &VerificationReport, want_cases: u64) {
    let ok = report.cases_run() == want_cases && report.passed();
    criterion(
        name,
        ok,
        format!(
            "cases={} (want {want_cases}), failures={}, elapsed={}ms",
            report.cases_run(),
            report.failures().len(),
            report.elapsed_ms(),
        ),
    );
}

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(ExactInt::from(v))
}

/// (n, s, expected terms as (degree, coefficient) pairs).
type DerivativeSpot = (usize, usize, &'static [(usize, i64)]);

fn u_expansion(terms: &[(usize, i64)]) -> ChebExpansion {
    ChebExpansion::from_terms(
        ChebBasis::SecondKind,
        terms.iter().map(|&(d, c)| (d, int(c))),
    )
}

#[test]
fn u_explicit_sweep_to_degree_64() {
    let report = verify_u_explicit(64);
    sweep_criterion("u-explicit sweep (n_max=64, 2145 cases)", &report, 2145);
    assert!(
        report.elapsed_ms() < 30_000,
        "u-explicit sweep took {}ms",
        report.elapsed_ms()
    );
}

#[test]
fn t_explicit_sweep_to_degree_64() {
    let report = verify_t_explicit(64);
    sweep_criterion("t-explicit sweep (n_max=64, 2145 cases)", &report, 2145);
    assert!(
        report.elapsed_ms() < 30_000,
        "t-explicit sweep took {}ms",
        report.elapsed_ms()
    );
}

#[test]
fn inversion_sweep_to_power_64() {
    let report = verify_inversion(64);
    sweep_criterion("inversion sweep (j_max=64, 65 cases)", &report, 65);
}

#[test]
fn inner_sum_sweep_to_degree_64() {
    let report = verify_inner_sum(64);
    let mut want_cases = 0u64;
    for n in 1..=64u64 {
        for s in 1..=n {
            want_cases += (n - s) / 2 + 1;
        }
    }
    sweep_criterion(
        "inner-sum sweep (all valid triples, n_max=64)",
        &report,
        want_cases,
    );
}

#[test]
fn triple_sum_sweep_to_degree_48() {
    let report = verify_triple_sum(48);
    sweep_criterion("triple-sum sweep (n_max=48, 1176 cases)", &report, 1176);
}

#[test]
fn golden_spot_derivatives() {
    let mut mismatches = Vec::new();

    let spots: [DerivativeSpot; 2] = [(4, 1, &[(3, 8), (1, 4)]), (5, 2, &[(3, 80), (1, 64)])];
    for (n, s, terms) in spots {
        let got = u_derivative_explicit(n, s);
        let want = u_expansion(terms);
        if got != want {
            mismatches.push(format!("U n={n} s={s}"));
        }
    }

    let t_spots: [DerivativeSpot; 2] = [(3, 1, &[(2, 6), (0, 3)]), (4, 2, &[(2, 48), (0, 32)])];
    for (n, s, terms) in t_spots {
        let got = chebdiff::t_derivative_explicit(n, s);
        let want = ChebExpansion::from_terms(
            ChebBasis::FirstKind,
            terms.iter().map(|&(d, c)| (d, int(c))),
        );
        if got != want {
            mismatches.push(format!("T n={n} s={s}"));
        }
    }

    // Differentiating U_n a full n times leaves the constant 2^n n!.
    for n in 0..=10usize {
        let got = u_derivative_explicit(n, n);
        let want_value =
            ExactRational::from_integer((ExactInt::one() << n) * chebdiff::factorial(n as u64));
        if got.num_terms() != 1 || got.coeff(0) != want_value {
            mismatches.push(format!("U n={n} s={n} (top order)"));
        }
    }

    criterion(
        "golden spot derivatives (U_4', U_5'', T_3', T_4'', U_n^(n) for n<=10)",
        mismatches.is_empty(),
        format!("mismatches: {mismatches:?}"),
    );
}

#[test]
fn first_order_operator_composes_to_second_order() {
    let mut mismatches = Vec::new();
    for basis in [ChebBasis::SecondKind, ChebBasis::FirstKind] {
        let first = DiffMatrix::new(basis, 1, 32);
        let second = DiffMatrix::new(basis, 2, 32);
        for j in 0..=32usize {
            let unit = ChebExpansion::from_terms(basis, [(j, ExactRational::one())]);
            let twice = first.apply(&first.apply(&unit).expect("degree fits"));
            let once = second.apply(&unit);
            match (twice, once) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => mismatches.push(format!("{basis:?} column {j}")),
            }
        }
    }
    criterion(
        "operator composition D1(D1) = D2 on all degrees <= 32",
        mismatches.is_empty(),
        format!("mismatches: {mismatches:?}"),
    );
}

#[test]
fn bench_paths_agree_at_degree_1024() {
    let result = run_bench(1024, 4);
    let ok = result.is_ok();
    let detail = match &result {
        Ok(report) => format!(
            "rows: {:?}",
            report.rows.iter().map(|r| r.n).collect::<Vec<_>>()
        ),
        Err(e) => format!("bench aborted: {e}"),
    };
    criterion(
        "bench equality guard at n_max=1024, s=4 (timings only after exact match)",
        ok,
        detail,
    );
    if let Ok(report) = result {
        println!("{}", report.to_table());
    }
}
