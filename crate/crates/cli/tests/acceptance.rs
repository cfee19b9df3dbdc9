//! Acceptance criteria. Arithmetic is exact, so every comparison is equality.
//! Each criterion prints one PASS/FAIL line; the test fails if any does.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use nuplus_core::cabling::{cable_v, nu_plus_cable, NuPlus, Regime};
use nuplus_core::lens::{d_lens, SpincIndex};
use nuplus_core::spinc::CableParams;
use nuplus_core::tables::{run_tables, REFERENCE_D, REFERENCE_PHI1, REFERENCE_PHI2, REFERENCE_V};
use nuplus_core::verify::{
    cabling_theorem_agreement, lens_conjugation_symmetry, lens_shift_delta,
    reducible_surgery_identity, torus_oracle_equivalence,
};
use nuplus_core::vseq::{d_surgery, v_torus_oracle, VSequence};
use nuplus_core::{rat, Rational};

const TABLES_BUDGET: Duration = Duration::from_millis(100);
const CONJUGATION_BUDGET: Duration = Duration::from_secs(5);
const VERIFY_BUDGET: Duration = Duration::from_secs(10);

fn nuplus(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_nuplus"))
        .args(args)
        .output()
        .expect("run nuplus");
    let elapsed = start.elapsed();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8"),
        elapsed,
    )
}

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn table1() -> Outcome {
    let (code, out, elapsed) = nuplus(&["tables", "--json"]);
    ensure(code == 0, format!("exit code {code}"))?;
    ensure(elapsed < TABLES_BUDGET, format!("took {elapsed:?}"))?;
    let json: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let mut matched = 0;
    for ((p, q), row) in REFERENCE_D {
        let emitted = &json["results"][format!("L({p},{q})")];
        for (i, reference) in row.iter().enumerate() {
            let got = emitted[i].as_str().ok_or("missing cell")?;
            if (p, q, i) == (5, 3, 6) {
                ensure(got == "0", format!("L(5,3) at 6 emitted {got}, expected 0"))?;
            } else {
                ensure(
                    got == *reference,
                    format!("L({p},{q}) at {i}: {got} vs {reference}"),
                )?;
                matched += 1;
            }
        }
    }
    let warnings = json["warnings"].to_string();
    ensure(
        warnings.contains("17/30 = 2/5 + 1/6"),
        "report lacks the i = 4 identity",
    )?;
    ensure(
        warnings.contains("d(L(5,3),1)"),
        "report lacks the label-6 cross-check",
    )?;
    ensure(run_tables().all_accepted(), "library report disagrees")?;
    Ok(format!(
        "{matched}/20 entries match, (L(5,3),6) emitted as 0 with notes, {elapsed:?}"
    ))
}

fn table2() -> Outcome {
    let (code, out, _) = nuplus(&["tables", "--json"]);
    ensure(code == 0, format!("exit code {code}"))?;
    let json: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    for (name, reference) in [
        ("phi1", REFERENCE_PHI1),
        ("phi2", REFERENCE_PHI2),
        ("V", REFERENCE_V),
    ] {
        let row: Vec<u64> =
            serde_json::from_value(json["results"][name].clone()).map_err(|e| e.to_string())?;
        ensure(
            row == reference,
            format!("{name}: {row:?} vs {reference:?}"),
        )?;
    }
    Ok("phi1, phi2, V rows match for i = 0..6".into())
}

fn identity_at_4() -> Outcome {
    let lhs = d_lens(15, 1, 4).map_err(|e| e.to_string())?;
    let a = d_lens(5, 3, 0).map_err(|e| e.to_string())?;
    let b = d_lens(3, 5, 0).map_err(|e| e.to_string())?;
    let v = nuplus_core::vseq::v_torus(3, 5).map_err(|e| e.to_string())?;
    let surgery =
        d_surgery(15, 1, SpincIndex::new(4, 15).unwrap(), &v).map_err(|e| e.to_string())?;
    ensure(lhs == rat(17, 30).unwrap(), format!("d(L(15,1),4) = {lhs}"))?;
    ensure(
        a == rat(2, 5).unwrap() && b == rat(1, 6).unwrap(),
        format!("{a}, {b}"),
    )?;
    ensure(&a + &b == lhs && surgery == lhs, "sum differs")?;
    Ok(format!("{lhs} = {a} + {b}"))
}

fn suite_outcome(s: nuplus_core::verify::SuiteResult) -> Outcome {
    match &s.counterexample {
        None => Ok(format!("{} cases, {:?}", s.cases, s.elapsed)),
        Some(c) => Err(c.clone()),
    }
}

fn conjugation() -> Outcome {
    let s = lens_conjugation_symmetry(40);
    let elapsed = s.elapsed;
    let out = suite_outcome(s)?;
    ensure(elapsed < CONJUGATION_BUDGET, format!("took {elapsed:?}"))?;
    Ok(out)
}

fn shift_delta() -> Outcome {
    suite_outcome(lens_shift_delta(40))
}

fn torus_oracle() -> Outcome {
    suite_outcome(torus_oracle_equivalence(13))
}

fn reducible_identity() -> Outcome {
    let good = suite_outcome(reducible_surgery_identity(1))?;
    let mutated = reducible_surgery_identity(2);
    ensure(!mutated.passed(), "coefficient 2 was not rejected")?;
    Ok(format!(
        "coefficient 1: {good}; coefficient 2 rejected ({})",
        mutated.counterexample.unwrap_or_default()
    ))
}

fn theorem_agreement() -> Outcome {
    let grid = suite_outcome(cabling_theorem_agreement())?;
    let c27 = CableParams::new(2, 7).unwrap();
    let trefoil = VSequence::new(vec![1, 0]).unwrap();
    let seq = cable_v(&trefoil, &c27)
        .map_err(|e| e.to_string())?
        .nu_plus();
    let formula = nu_plus_cable(1, &c27).map_err(|e| e.to_string())?;
    ensure(
        seq == NuPlus::Exact(5) && formula.value == 5,
        format!("(2,7): {seq} vs {}", formula.value),
    )?;
    let fixture = nu_plus_cable(2, &CableParams::new(2, 5).unwrap()).map_err(|e| e.to_string())?;
    ensure(
        fixture.value == 6 && fixture.regime == Regime::ProofGap,
        format!("nu+ = 2, (2,5): {fixture:?}"),
    )?;
    Ok(format!(
        "{grid}; (2,7) of T(2,3) -> 5; nu+ = 2, (2,5) -> 6 [{}]",
        fixture.regime
    ))
}

fn trefoil_surgery() -> Outcome {
    let v = v_torus_oracle(2, 3).map_err(|e| e.to_string())?;
    let d = d_surgery(1, 1, SpincIndex::new(0, 1).unwrap(), &v).map_err(|e| e.to_string())?;
    ensure(d == Rational::from_integer(-2), format!("got {d}"))?;
    Ok(format!("V(T(2,3)) = {v}, d = {d}"))
}

fn full_verify() -> Outcome {
    let (code, out, elapsed) = nuplus(&["verify", "--max-p", "40", "--json"]);
    ensure(code == 0, format!("exit code {code}: {out}"))?;
    ensure(elapsed < VERIFY_BUDGET, format!("took {elapsed:?}"))?;
    let json: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(json["results"]["passed"] == true, "report not passed")?;
    Ok(format!("all suites pass in {elapsed:?}"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("1 table of correction terms", table1),
        ("2 table of projections and V", table2),
        ("3 identity 17/30 = 2/5 + 1/6", identity_at_4),
        ("4 lens conjugation symmetry, p <= 40", conjugation),
        ("5 shift-by-q delta (2j+1-p)/p, p <= 40", shift_delta),
        ("6 torus V vs Alexander oracle, q <= 13", torus_oracle),
        (
            "7 reducible-surgery identity, K = T(2,3)",
            reducible_identity,
        ),
        ("8 cabling formula vs cable sequences", theorem_agreement),
        ("9 +1-surgery on the trefoil", trefoil_surgery),
        ("10 verify --max-p 40 under 10 s", full_verify),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
