//! Release gate for the toolkit. Each test covers one numbered criterion
//! and prints a single `acceptance <n> [pass|FAIL] ...` line; run with
//! `cargo test --test acceptance -- --nocapture` to see the lines for
//! passing criteria too.

use std::time::{Duration, Instant};

use num_traits::Signed;

use planepart::asymptotics::wright_pp_with_exact;
use planepart::identities::{
    euler_partition_series, g_from_expansion, g_polynomials, h_from_expansion, h_polynomials,
    macmahon_series, trace_table, verify_euler_inverse, verify_euler_plus, verify_new,
    verify_stanley,
};
use planepart::oracle::{count_partitions, enumerate_plane_partitions, trace_histogram};
use planepart::qseries::{gauss_binom, gauss_binom_pascal};
use planepart::{Int, IntPoly};

fn report(number: u8, label: &str, pass: bool) {
    let verdict = if pass { "pass" } else { "FAIL" };
    println!("acceptance {number} [{verdict}] {label}");
    assert!(pass, "acceptance criterion {number} failed: {label}");
}

#[test]
fn criterion_1_plane_partition_series_anchors() {
    let opening = macmahon_series(5);
    let pass = opening.poly() == &IntPoly::from_ints(&[1, 1, 3, 6, 13, 24])
        && macmahon_series(4).coeff(4) == Int::from(13);
    report(1, "series opens 1, 1, 3, 6, 13, 24 and pp(4) = 13", pass);
}

#[test]
fn criterion_2_trace_count_anchors() {
    let table = trace_table(5, 2);
    let pass = table.count(4, 2) == &Int::from(6) && table.count(5, 2) == &Int::from(10);
    report(2, "trace counts c[4][2] = 6 and c[5][2] = 10", pass);
}

#[test]
fn criterion_3_printed_numerator_polynomials() {
    let g = g_polynomials(3);
    let h = h_polynomials(5);
    let expected_g = [
        IntPoly::from_ints(&[1]),
        IntPoly::from_ints(&[1, 0, 1]),
        IntPoly::from_ints(&[1, 0, 1, 2, 1, 0, 1]),
    ];
    let expected_h = [
        IntPoly::from_ints(&[1]),
        IntPoly::from_ints(&[0, 2]),
        IntPoly::from_ints(&[1, 4, 1]).shifted(2),
        IntPoly::from_ints(&[3, 4, 10, 4, 3]).shifted(4),
        IntPoly::from_ints(&[3, 8, 15, 20, 28, 20, 15, 8, 3]).shifted(6),
    ];
    let pass = (1..=3).all(|n| g[n] == expected_g[n - 1])
        && (1..=5).all(|n| h[n] == expected_h[n - 1]);
    report(3, "g_1..g_3 and h_1..h_5 match their published values", pass);
}

#[test]
fn criterion_4_identity_verification() {
    let started = Instant::now();
    let all_passed = [
        verify_stanley(8, 40).expect("precondition holds").passed,
        verify_stanley(8, 60).expect("precondition holds").passed,
        verify_new(8, 40).expect("precondition holds").passed,
        verify_new(8, 60).expect("precondition holds").passed,
        verify_euler_inverse(8, 32).passed,
        verify_euler_plus(8, 32).passed,
    ]
    .into_iter()
    .all(|p| p);
    let elapsed = started.elapsed();
    let pass = all_passed && elapsed < Duration::from_secs(60);
    report(
        4,
        &format!("all four identities verify at the stated orders in {elapsed:.2?}"),
        pass,
    );
}

#[test]
fn criterion_5_oracle_equivalence() {
    let started = Instant::now();

    let table = trace_table(10, 10);
    let mut traces_agree = true;
    for weight in 0..=10usize {
        let histogram = trace_histogram(weight);
        traces_agree &= histogram.keys().all(|&t| t <= 10);
        for trace in 0..=10usize {
            let counted = histogram
                .get(&(trace as u64))
                .cloned()
                .unwrap_or_default();
            traces_agree &= &counted == table.count(weight, trace);
        }
    }

    let plane_series = macmahon_series(12);
    let enumeration_agrees = (0..=12)
        .all(|n| Int::from(enumerate_plane_partitions(n).len()) == plane_series.coeff(n));

    let linear_series = euler_partition_series(20);
    let partitions_agree = (0..=20).all(|n| count_partitions(n) == linear_series.coeff(n));

    let elapsed = started.elapsed();
    let pass = traces_agree
        && enumeration_agrees
        && partitions_agree
        && elapsed < Duration::from_secs(120);
    report(
        5,
        &format!("oracles agree with the series (traces to 10, pp to 12, p to 20) in {elapsed:.2?}"),
        pass,
    );
}

#[test]
fn criterion_6_dual_path_numerator_recovery() {
    let g = g_polynomials(15);
    let g_recovered = (0..=15).all(|n| {
        let order = n + g[n].degree().unwrap_or(0) + 4;
        g_from_expansion(n, order).map(|p| p == g[n]).unwrap_or(false)
    });
    let h = h_polynomials(12);
    let h_recovered = (0..=12).all(|n| {
        let order = n + h[n].degree().unwrap_or(0) + 4;
        h_from_expansion(n, order).map(|p| p == h[n]).unwrap_or(false)
    });
    report(
        6,
        "numerators cleared from the raw products match the recursions (g to 15, h to 12)",
        g_recovered && h_recovered,
    );
}

#[test]
fn criterion_7_gaussian_binomial_suite() {
    let mut binomials = vec![vec![Int::from(1)]];
    for n in 1..=20usize {
        let prev = &binomials[n - 1];
        let mut row = vec![Int::from(1)];
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(Int::from(1));
        binomials.push(row);
    }

    let mut pass = true;
    for n in 0..=20usize {
        for k in 0..=n {
            let division = gauss_binom::<Int>(n, k).into_poly();
            pass &= division == gauss_binom_pascal::<Int>(n, k);
            pass &= division == gauss_binom::<Int>(n, n - k).into_poly();
            let coeffs = division.coeffs();
            pass &= coeffs.iter().eq(coeffs.iter().rev());
            pass &= division.degree() == Some(k * (n - k));
            pass &= division.eval_at_one() == binomials[n][k];
        }
    }
    report(
        7,
        "both constructions agree and are symmetric, palindromic, of degree k(n-k), \
         and count C(n, k) at x = 1, for all n <= 20",
        pass,
    );
}

#[test]
fn criterion_8_numerator_positivity() {
    let g = g_polynomials(15);
    let g_nonnegative = (0..=15).all(|n| g[n].coeffs().iter().all(|c| !c.is_negative()));
    let h = h_polynomials(12);
    let h_nonnegative = (0..=12).all(|n| h[n].coeffs().iter().all(|c| !c.is_negative()));
    println!("observation: h_n coefficients nonnegative for all n <= 12: {h_nonnegative}");
    report(8, "g_n coefficients nonnegative for all n <= 15", g_nonnegative);
}

#[test]
fn criterion_9_asymptotic_ratio_convergence() {
    let deviations = [100usize, 200, 400].map(|n| {
        let estimate = wright_pp_with_exact(n).expect("within double range");
        (estimate.ratio.expect("exact requested") - 1.0).abs()
    });
    let pass = deviations[0] > deviations[1] && deviations[1] > deviations[2];
    report(
        9,
        &format!(
            "ratio deviations shrink along n = 100, 200, 400: {:.3e} > {:.3e} > {:.3e}",
            deviations[0], deviations[1], deviations[2]
        ),
        pass,
    );
}
