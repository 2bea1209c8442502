//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//! Every check is an exact integer or polynomial comparison.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dm_core::{
    audit_pairing, classify, count_table, enumerate_union, fixed_point, oracle_t_from_involutions,
    phi, shape_checks, verify_alternating_sum, verify_corollary, verify_main_theorem, AltSumMode,
    CaseLabel, EnumerationBound, MainForm, SymMatrix,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bound() -> EnumerationBound {
    EnumerationBound::default()
}

fn m(rows: &[&[u64]]) -> SymMatrix {
    SymMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

const ALT_SUM_BUDGET: Duration = Duration::from_secs(60);

fn ac1_alternating_sum() -> Outcome {
    let start = Instant::now();
    for n in 1..=9 {
        let counts =
            verify_alternating_sum(n, AltSumMode::ByCounts, bound()).map_err(|e| e.to_string())?;
        let pairing =
            verify_alternating_sum(n, AltSumMode::ByPairing, bound()).map_err(|e| e.to_string())?;
        ensure(counts.passed, || format!("by counts: {counts}"))?;
        ensure(pairing.passed, || format!("by pairing: {pairing}"))?;
        ensure(counts.lhs == pairing.lhs, || {
            format!("n={n}: modes disagree")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ALT_SUM_BUDGET, || {
        format!("took {elapsed:?}, budget {ALT_SUM_BUDGET:?}")
    })?;
    Ok(format!("n=1..9, both modes equal (-1)^n, {elapsed:.2?}"))
}

fn ac2_main_theorem() -> Outcome {
    for n in 1..=9 {
        for form in [MainForm::First, MainForm::Second] {
            let r = verify_main_theorem(n, form, bound()).map_err(|e| e.to_string())?;
            ensure(r.passed, || r.to_string())?;
        }
    }
    Ok("n=1..9, both polynomial forms exact".into())
}

fn ac3_corollary() -> Outcome {
    for n in [2, 4, 6, 8] {
        let r = verify_corollary(n, bound()).map_err(|e| e.to_string())?;
        ensure(r.passed, || r.to_string())?;
        let audit = audit_pairing(n, true, bound()).map_err(|e| e.to_string())?;
        let f = fixed_point(n).map_err(|e| e.to_string())?;
        ensure(audit.passed() && audit.fixed_points == [f], || {
            format!(
                "n={n}: fixed points {:?}, {:?}",
                audit.fixed_points, audit.violations
            )
        })?;
    }
    Ok("n in {2,4,6,8}: sum (-1)^k W(n,k) = 1, zero-diagonal pairing fixes only F_n".into())
}

fn ac4_involution() -> Outcome {
    let mut elements = 0;
    for n in 1..=8 {
        let f = fixed_point(n).map_err(|e| e.to_string())?;
        let mut fixed = Vec::new();
        for x in enumerate_union(n, false, bound()).map_err(|e| e.to_string())? {
            elements += 1;
            let r = phi(&x).map_err(|e| e.to_string())?;
            let back = phi(&r.image).map_err(|e| e.to_string())?;
            ensure(back.image == x, || {
                format!("phi(phi({x:?})) = {:?}", back.image)
            })?;
            if r.image == x {
                fixed.push(x);
            } else {
                ensure(r.image.dim().abs_diff(x.dim()) == 1, || {
                    format!("{x:?} -> {:?} does not change dimension by one", r.image)
                })?;
            }
        }
        ensure(fixed == [f.clone()], || {
            format!("n={n}: fixed points {fixed:?}, expected {f:?}")
        })?;
    }
    Ok(format!(
        "n=1..8, {elements} matrices, phi∘phi = id, one fixed point each, |Δdim| = 1"
    ))
}

fn ac5_case_partition() -> Outcome {
    let mut elements = 0;
    for n in 1..=8 {
        // classify re-evaluates all four case predicates and errors unless exactly one fires
        for x in enumerate_union(n, false, bound()).map_err(|e| e.to_string())? {
            elements += 1;
            let r = phi(&x).map_err(|e| e.to_string())?;
            ensure(classify(&x) == Ok(r.label), || {
                format!("{x:?}: unstable label")
            })?;
            if r.is_fixed() {
                continue;
            }
            let back = phi(&r.image).map_err(|e| e.to_string())?;
            ensure(back.label == r.label.dual(), || {
                format!("{x:?} is {} but phi(X) is {}", r.label, back.label)
            })?;
            if r.label == CaseLabel::Case4Recurse {
                let (a, b) = (r.inner_label.unwrap(), back.inner_label.unwrap());
                ensure(b == a.dual(), || format!("{x:?}: inner labels {a} / {b}"))?;
            }
        }
        let audit = audit_pairing(n, false, bound()).map_err(|e| e.to_string())?;
        let labelled: u64 = audit.label_counts.iter().map(|(_, c)| c).sum();
        ensure(audit.passed() && labelled == audit.elements, || {
            format!("n={n}: {:?}", audit.violations)
        })?;
    }
    Ok(format!(
        "n=1..8, {elements} matrices, one label each, Pi1 <-> Pi2 duality holds"
    ))
}

fn ac6_oracle() -> Outcome {
    for n in 1..=8 {
        let recovered = oracle_t_from_involutions(n, bound()).map_err(|e| e.to_string())?;
        let direct = count_table(n, false, bound()).map_err(|e| e.to_string())?;
        ensure(recovered == direct, || {
            format!("n={n}: {recovered:?} vs {direct:?}")
        })?;
    }
    Ok("n=1..8, T(n,k) from involutions equals direct enumeration".into())
}

fn ac7_anchors() -> Outcome {
    let t1 = count_table(1, false, bound()).map_err(|e| e.to_string())?;
    ensure(t1 == [1], || format!("T(1,·) = {t1:?}"))?;

    let f = |n| fixed_point(n).unwrap();
    ensure(f(1) == m(&[&[1]]), || "F_1".into())?;
    ensure(f(2) == m(&[&[0, 1], &[1, 0]]), || "F_2".into())?;
    ensure(f(4) == m(&[&[0, 2], &[2, 0]]), || "F_4".into())?;
    ensure(f(3) == m(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]), || {
        "F_3".into()
    })?;
    ensure(f(5) == m(&[&[1, 0, 0], &[0, 0, 2], &[0, 2, 0]]), || {
        "F_5".into()
    })?;

    for (n, expected) in [(2u64, vec![1u64, 2]), (3, vec![1, 4, 4])] {
        let brute: Vec<u64> = (1..=n as usize)
            .map(|k| common::brute_force_family(n, k, false).len() as u64)
            .collect();
        let direct = count_table(n as usize, false, bound()).map_err(|e| e.to_string())?;
        ensure(brute == expected && direct == expected, || {
            format!("T({n},·): brute force {brute:?}, enumeration {direct:?}")
        })?;
    }
    Ok("T(1,·)=[1], F_1/F_2/F_3/F_4/F_5 displays, T(2,·)=[1,2], T(3,·)=[1,4,4]".into())
}

fn ac8_shapes() -> Outcome {
    let report = shape_checks(10, bound()).map_err(|e| e.to_string())?;
    for row in &report.rows {
        ensure(row.symmetric && row.unimodal, || {
            format!("n={}: {:?}", row.n, row.row)
        })?;
    }
    let lc = match report.first_log_concave_failure {
        Some(n) => format!("log-concavity first fails at n={n}"),
        None => "no log-concavity failure for n <= 10".into(),
    };
    Ok(format!("I(n,·) symmetric and unimodal for n <= 10; {lc}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1 alternating sum of T(n,k)", ac1_alternating_sum),
        ("AC2 main polynomial identity", ac2_main_theorem),
        ("AC3 zero-diagonal alternating sum", ac3_corollary),
        ("AC4 phi is an involution", ac4_involution),
        ("AC5 case partition and duality", ac5_case_partition),
        ("AC6 involution oracle for T(n,k)", ac6_oracle),
        ("AC7 desk-scale anchors", ac7_anchors),
        ("AC8 descent row shapes", ac8_shapes),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
