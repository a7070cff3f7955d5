//! The `verify` subcommand: named cross-validation suites pitting
//! independent evaluation routes against each other. Any failing check puts
//! its counterexample in the report and the process exits nonzero.

use num_bigint::BigInt;
use num_traits::One;

use combinat_core::{alternating_binomial, binomial, IntMatrix, IntVector};
use generic_chi::{
    betti_ci_total_distinct, betti_generic, betti_one_multi, chi_khovanskii, lefschetz_chi_affine,
    quadrics_projective, GenericSystem, Setting,
};
use polytope_mv::{
    mixed_volume, mixed_volume_oracle_interpolation, n_refined, MixedVolumeQuery, Polytope,
};

use crate::cli::VerifyArgs;
use crate::commands::Ctx;
use crate::error::CliError;
use crate::output::emit_rows;
use crate::render::ReportRow;

struct Check {
    name: &'static str,
    run: fn() -> Result<String, String>,
}

fn suites() -> Vec<(&'static str, Vec<Check>)> {
    vec![
        (
            "khovanskii-closed-forms",
            vec![
                Check {
                    name: "two-quadrics-affine-law",
                    run: two_quadrics_affine_law,
                },
                Check {
                    name: "hypersurface-law",
                    run: hypersurface_law,
                },
                Check {
                    name: "total-degrees-closed-form",
                    run: total_degrees_closed_form,
                },
                Check {
                    name: "one-multi-anchor",
                    run: one_multi_anchor,
                },
                Check {
                    name: "chern-lefschetz-agreement",
                    run: chern_lefschetz_agreement,
                },
                Check {
                    name: "projective-quadrics-anchor",
                    run: projective_quadrics_anchor,
                },
            ],
        ),
        (
            "mv-oracles",
            vec![
                Check {
                    name: "closed-forms-vs-interpolation",
                    run: closed_forms_vs_interpolation,
                },
                Check {
                    name: "box-count-factorial-relation",
                    run: box_count_factorial_relation,
                },
            ],
        ),
        (
            "identities",
            vec![
                Check {
                    name: "alternating-binomial-sum",
                    run: alternating_binomial_sum,
                },
                Check {
                    name: "alternating-binomial-difference",
                    run: alternating_binomial_difference,
                },
                Check {
                    name: "chi-betti-conversions",
                    run: chi_betti_conversions,
                },
            ],
        ),
    ]
}

// --- khovanskii-closed-forms ------------------------------------------------

/// Two generic quadrics in k variables have affine Betti total 2k.
fn two_quadrics_affine_law() -> Result<String, String> {
    for k in 2..=10usize {
        let sys = GenericSystem::quadrics(k, 2).map_err(|e| e.to_string())?;
        let report = betti_generic(&sys, Setting::Affine).map_err(|e| e.to_string())?;
        let expected = BigInt::from(2 * k as u64);
        if report.betti_sum != expected {
            return Err(format!(
                "k = {k}: betti total = {}, expected {expected}",
                report.betti_sum
            ));
        }
    }
    Ok("k = 2..10".to_string())
}

/// A generic degree-d hypersurface in k variables has affine Betti total
/// 1 + (d-1)^k.
fn hypersurface_law() -> Result<String, String> {
    for d in 1..=5u64 {
        for k in 1..=6usize {
            let sys = GenericSystem::total_degrees(k, &[d]).map_err(|e| e.to_string())?;
            let report = betti_generic(&sys, Setting::Affine).map_err(|e| e.to_string())?;
            let expected = BigInt::one() + BigInt::from(d - 1).pow(k as u32);
            if report.betti_sum != expected {
                return Err(format!(
                    "d = {d}, k = {k}: betti total = {}, expected {expected}",
                    report.betti_sum
                ));
            }
        }
    }
    Ok("d = 1..5, k = 1..6".to_string())
}

/// Nondecreasing degree tuples from a small pool; the subset-sum engine and
/// the alternating closed form must agree exactly.
fn degree_tuples(ell: usize, max_d: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = vec![1u64; ell];
    loop {
        out.push(current.clone());
        let mut pos = ell;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if current[pos] < max_d {
                let next = current[pos] + 1;
                for entry in current.iter_mut().skip(pos) {
                    *entry = next;
                }
                break;
            }
        }
    }
}

fn total_degrees_closed_form() -> Result<String, String> {
    let mut instances = 0usize;
    for k in 1..=5usize {
        for ell in 1..=k {
            for degrees in degree_tuples(ell, 3) {
                let d = IntVector::from_u64s(&degrees);
                let sys = GenericSystem::total_degrees(k, &degrees).map_err(|e| e.to_string())?;
                let engine = betti_generic(&sys, Setting::Affine).map_err(|e| e.to_string())?;
                let closed = betti_ci_total_distinct(k, &d).map_err(|e| e.to_string())?;
                if engine.betti_sum != closed {
                    return Err(format!(
                        "k = {k}, degrees = {degrees:?}: engine {}, closed form {closed}",
                        engine.betti_sum
                    ));
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} systems, k = 1..5, degrees in 1..3"))
}

/// The (2,2) bidegree anchor: closed form and engine both give 6.
fn one_multi_anchor() -> Result<String, String> {
    let closed = betti_one_multi(&IntVector::from_u64s(&[2, 2])).map_err(|e| e.to_string())?;
    if closed != BigInt::from(6) {
        return Err(format!("closed form gave {closed}, expected 6"));
    }
    let sys = GenericSystem::boxes(&IntMatrix::from_rows(&[vec![2, 2]]))
        .map_err(|e| e.to_string())?;
    let engine = betti_generic(&sys, Setting::Affine).map_err(|e| e.to_string())?;
    if engine.betti_sum != BigInt::from(6) {
        return Err(format!("engine gave {}, expected 6", engine.betti_sum));
    }
    Ok("bidegree (2,2): both routes give 6".to_string())
}

/// The characteristic-class route to affine chi must match the subset-sum
/// engine for total-degree systems.
fn chern_lefschetz_agreement() -> Result<String, String> {
    let mut instances = 0usize;
    // The characteristic-class route slices affinely, which needs l <= k-1.
    for ell in 1..=3usize {
        for k in (ell + 1)..=5 {
            for degrees in degree_tuples(ell, 3) {
                let d = IntVector::from_u64s(&degrees);
                let via_classes = lefschetz_chi_affine(k, &d).map_err(|e| e.to_string())?;
                let sys = GenericSystem::total_degrees(k, &degrees).map_err(|e| e.to_string())?;
                let via_engine = chi_khovanskii(&sys).map_err(|e| e.to_string())?;
                if via_classes != via_engine {
                    return Err(format!(
                        "k = {k}, degrees = {degrees:?}: classes {via_classes}, engine {via_engine}"
                    ));
                }
                instances += 1;
            }
        }
    }
    Ok(format!("{instances} systems, l = 1..3, k <= 5"))
}

/// Two projective quadrics in P^3: chi = 0, Betti total 4.
fn projective_quadrics_anchor() -> Result<String, String> {
    let report = quadrics_projective(3, 2).map_err(|e| e.to_string())?;
    if report.chi != BigInt::ZERO || report.betti_sum != BigInt::from(4) {
        return Err(format!(
            "chi = {}, betti = {}, expected 0 and 4",
            report.chi, report.betti_sum
        ));
    }
    Ok("k = 3, l = 2: chi = 0, betti total = 4".to_string())
}

// --- mv-oracles ---------------------------------------------------------------

fn closed_forms_vs_interpolation() -> Result<String, String> {
    let mut queries: Vec<MixedVolumeQuery> = Vec::new();
    let box_instances: [&[Vec<u64>]; 4] = [
        &[vec![1, 2], vec![3, 1]],
        &[vec![2, 2, 2], vec![1, 3, 1], vec![2, 1, 4]],
        &[vec![1, 1, 2, 3], vec![2, 1, 1, 1], vec![1, 4, 1, 2], vec![3, 1, 2, 1]],
        &[vec![5, 1], vec![1, 5]],
    ];
    for rows in box_instances {
        let bodies = rows.iter().map(|r| Polytope::axis_box_u64(r)).collect();
        queries.push(MixedVolumeQuery::of_bodies(bodies).map_err(|e| e.to_string())?);
    }
    let simplex_instances: [(usize, &[u64]); 3] =
        [(2, &[1, 2]), (3, &[2, 2, 3]), (4, &[1, 2, 3, 4])];
    for (k, degrees) in simplex_instances {
        let bodies = degrees
            .iter()
            .map(|&d| Polytope::full_simplex(k, d))
            .collect();
        queries.push(MixedVolumeQuery::of_bodies(bodies).map_err(|e| e.to_string())?);
    }
    // Repeated bodies through multiplicities.
    queries.push(
        MixedVolumeQuery::new(vec![Polytope::axis_box_u64(&[2, 3, 1])], vec![3])
            .map_err(|e| e.to_string())?,
    );
    queries.push(
        MixedVolumeQuery::new(
            vec![Polytope::full_simplex(3, 2), Polytope::full_simplex(3, 1)],
            vec![2, 1],
        )
        .map_err(|e| e.to_string())?,
    );

    for (n, q) in queries.iter().enumerate() {
        let closed = mixed_volume(q).map_err(|e| e.to_string())?;
        let oracle = mixed_volume_oracle_interpolation(q).map_err(|e| e.to_string())?;
        if closed != oracle {
            return Err(format!(
                "instance {n}: closed form {closed}, oracle {oracle}"
            ));
        }
    }
    Ok(format!("{} deterministic queries", queries.len()))
}

/// The refined box count times the multiplicity factorials equals k! times
/// the mixed volume of the axis boxes.
fn box_count_factorial_relation() -> Result<String, String> {
    let instances: [(&[Vec<u64>], &[u64]); 5] = [
        (&[vec![1, 2], vec![2, 1]], &[1, 1]),
        (&[vec![2, 2, 2]], &[3]),
        (&[vec![1, 2, 1], vec![2, 1, 3]], &[2, 1]),
        (&[vec![2, 1, 1, 1], vec![1, 3, 1, 2]], &[2, 2]),
        (&[vec![1, 1, 2, 3, 1], vec![2, 2, 1, 1, 1]], &[3, 2]),
    ];
    for (rows, alpha) in instances {
        let k = rows[0].len();
        let d = IntMatrix::from_rows(rows);
        let alpha_vec = IntVector::from_u64s(alpha);
        let refined = n_refined(&d, &alpha_vec).map_err(|e| e.to_string())?;

        let bodies: Vec<Polytope> = rows.iter().map(|r| Polytope::axis_box_u64(r)).collect();
        let mult: Vec<usize> = alpha.iter().map(|&a| a as usize).collect();
        let q = MixedVolumeQuery::new(bodies, mult).map_err(|e| e.to_string())?;
        let mv = mixed_volume(&q).map_err(|e| e.to_string())?;

        let alpha_factorials: BigInt = alpha
            .iter()
            .map(|&a| (1..=a).map(BigInt::from).product::<BigInt>())
            .product();
        let k_factorial: BigInt = (1..=k as u64).map(BigInt::from).product();
        let lhs = num_rational::BigRational::from(refined.clone() * &alpha_factorials);
        let rhs = num_rational::BigRational::from(k_factorial) * &mv;
        if lhs != rhs {
            return Err(format!(
                "rows = {rows:?}, alpha = {alpha:?}: count relation fails \
                 (refined = {refined}, mv = {mv})"
            ));
        }
    }
    Ok(format!("{} box systems, k <= 5", instances.len()))
}

// --- identities -----------------------------------------------------------------

fn alternating_binomial_sum() -> Result<String, String> {
    // A(n, p) is defined for n >= p >= 0, so both terms need n >= p + 1.
    for p in 0..=6i64 {
        for n in (p + 1)..=40 {
            let lhs = alternating_binomial(n, p) + alternating_binomial(n - 1, p);
            let rhs = binomial(n + 1, p + 1);
            if lhs != rhs {
                return Err(format!("n = {n}, p = {p}: sum {lhs} != binomial {rhs}"));
            }
        }
    }
    Ok("p = 0..6, n = p+1..40".to_string())
}

fn alternating_binomial_difference() -> Result<String, String> {
    for p in 1..=6i64 {
        for n in (p + 1)..=40 {
            let lhs = alternating_binomial(n, p) - alternating_binomial(n - 1, p);
            let rhs = alternating_binomial(n - 1, p - 1);
            if lhs != rhs {
                return Err(format!("n = {n}, p = {p}: difference {lhs} != {rhs}"));
            }
        }
    }
    Ok("p = 1..6, n = p+1..40".to_string())
}

/// Every report's chi-to-Betti conversion must hold as stated.
fn chi_betti_conversions() -> Result<String, String> {
    let mut reports = Vec::new();
    for k in 2..=8usize {
        let sys = GenericSystem::quadrics(k, 2).map_err(|e| e.to_string())?;
        reports.push(betti_generic(&sys, Setting::Affine).map_err(|e| e.to_string())?);
    }
    for d in 2..=4u64 {
        for k in 2..=4usize {
            let sys = GenericSystem::total_degrees(k, &[d]).map_err(|e| e.to_string())?;
            reports.push(betti_generic(&sys, Setting::Affine).map_err(|e| e.to_string())?);
        }
    }
    for ell in 2..=3usize {
        for k in (ell + 1)..=6 {
            reports.push(quadrics_projective(k, ell).map_err(|e| e.to_string())?);
        }
    }
    let count = reports.len();
    for report in reports {
        if !report.conversion_holds() {
            return Err(format!(
                "conversion {:?} fails for ambient {:?}, chi = {}, betti = {}",
                report.conversion, report.ambient, report.chi, report.betti_sum
            ));
        }
    }
    Ok(format!("{count} reports across both settings"))
}

// --- driver ---------------------------------------------------------------------

pub fn run(args: &VerifyArgs, ctx: &Ctx) -> Result<(), CliError> {
    let all = suites();
    let selected: Vec<&(&'static str, Vec<Check>)> = if args.suite.is_empty() {
        all.iter().collect()
    } else {
        args.suite
            .iter()
            .map(|name| {
                all.iter()
                    .find(|(suite, _)| suite == name)
                    .ok_or_else(|| CliError::UnknownId {
                        id: name.clone(),
                        known: all
                            .iter()
                            .map(|(suite, _)| *suite)
                            .collect::<Vec<_>>()
                            .join(", "),
                    })
            })
            .collect::<Result<_, _>>()?
    };

    let mut rows = Vec::new();
    let mut failures = 0usize;
    for (suite, checks) in selected {
        for check in checks {
            let (value, notes) = match (check.run)() {
                Ok(detail) => ("pass", detail),
                Err(counterexample) => {
                    failures += 1;
                    ("fail", counterexample)
                }
            };
            rows.push(ReportRow {
                id: check.name.to_string(),
                parameters: format!("suite={suite}"),
                value: value.to_string(),
                notes,
                citation: suite.to_string(),
            });
        }
    }
    emit_rows(&rows, ctx.format, ctx.out)?;
    if failures > 0 {
        return Err(CliError::Failed(format!(
            "{failures} verification check(s) failed; see the report rows marked fail"
        )));
    }
    Ok(())
}
