use serde_json::{json, Value};

use nuplus_core::cabling::{
    cable_v, eval_knot, g4_cable_upper_bound, nu_plus_cable, nu_plus_cable_lower_bound, NuPlus,
    Regime,
};
use nuplus_core::expr::parse_knot_expr;
use nuplus_core::lens::{d_lens, d_lens_all, LensSpace, SpincIndex};
use nuplus_core::spinc::CableParams;
use nuplus_core::tables::run_tables;
use nuplus_core::verify::run_verify;
use nuplus_core::vseq::{d_surgery, nu_plus as seq_nu_plus, v_torus};
use nuplus_core::{Error, Result};

use crate::output::OutputRecord;

/// A record plus whether the command's own checks passed.
pub type Outcome = (OutputRecord, bool);

fn positive(name: &str, v: i64) -> Result<u64> {
    u64::try_from(v)
        .ok()
        .filter(|&v| v > 0)
        .ok_or_else(|| Error::Domain(format!("{name} must be positive, got {v}")))
}

fn nu_value(nu: &NuPlus) -> Value {
    match nu {
        NuPlus::Exact(n) => json!(n),
        NuPlus::AtLeast(n) => json!({ "at_least": n }),
    }
}

pub fn lens_d(p: i64, q: i64, label: Option<i64>) -> Result<Outcome> {
    let (p, q) = (positive("p", p)?, positive("q", q)?);
    let mut rec = OutputRecord::new("lens-d").input("p", p).input("q", q);
    match label {
        Some(i) => {
            rec = rec.input("i", i);
            let d = d_lens(p, q, i)?;
            rec.text.push(format!("d(L({p},{q}), {i}) = {d}"));
            rec.result("d", d.to_string());
        }
        None => {
            let all = d_lens_all(p, q)?;
            rec.text = all
                .iter()
                .enumerate()
                .map(|(i, d)| format!("d(L({p},{q}), {i}) = {d}"))
                .collect();
            rec.result(
                "d",
                Value::Array(all.iter().map(|d| json!(d.to_string())).collect()),
            );
        }
    }
    Ok((rec, true))
}

pub fn surgery_d(p: i64, q: i64, i: i64, knot: &str) -> Result<Outcome> {
    let (p, q) = (positive("p", p)?, positive("q", q)?);
    LensSpace::new(p, q)?;
    let expr = parse_knot_expr(knot)?;
    let eval = eval_knot(&expr)?;
    let v = eval.sequence().ok_or_else(|| {
        Error::Incomplete(format!(
            "V-sequence of {expr} is only known through index {} (nu+ {})",
            eval.v_prefix.len().saturating_sub(1),
            eval.nu_plus
        ))
    })?;
    if !(0..p as i64).contains(&i) {
        return Err(Error::Domain(format!("label {i} is outside 0..{p}")));
    }
    let d = d_surgery(p, q, SpincIndex::new(i, p)?, &v)?;
    let mut rec = OutputRecord::new("surgery-d")
        .input("p", p)
        .input("q", q)
        .input("i", i)
        .input("knot", expr.to_string());
    rec.text
        .push(format!("d(S^3_{{{p}/{q}}}({expr}), {i}) = {d}"));
    rec.result("d", d.to_string());
    rec.result("v", v.to_string());
    Ok((rec, true))
}

pub fn torus_v(p: i64, q: i64) -> Result<Outcome> {
    let (p, q) = (positive("p", p)?, positive("q", q)?);
    let v = v_torus(p, q)?;
    let mut rec = OutputRecord::new("torus-v").input("p", p).input("q", q);
    rec.text.push(format!("V(T({p},{q})) = {v}"));
    rec.text.push(format!("nu+ = {}", seq_nu_plus(&v)));
    rec.result("v", v.to_string());
    rec.result("nu_plus", seq_nu_plus(&v));
    Ok((rec, true))
}

pub fn cable(
    p: i64,
    q: i64,
    knot: Option<&str>,
    nu: Option<u64>,
    g4: Option<u64>,
) -> Result<Outcome> {
    let params = CableParams::new(positive("p", p)?, positive("q", q)?)?;
    let mut rec = OutputRecord::new("cable")
        .input("p", params.p())
        .input("q", params.q());

    let companion_nu = match (knot, nu) {
        (Some(text), _) => {
            let expr = parse_knot_expr(text)?;
            rec = rec.input("knot", expr.to_string());
            let eval = eval_knot(&expr)?;
            let Some(vk) = eval.sequence() else {
                return Err(Error::Incomplete(format!(
                    "companion {expr} has nu+ {}; its V-sequence is not fully known",
                    eval.nu_plus
                )));
            };
            let cv = cable_v(&vk, &params)?;
            rec.text
                .push(format!("companion V = {vk}, nu+ = {}", seq_nu_plus(&vk)));
            rec.text.push(format!(
                "cable V (i <= {}) = {}{}",
                cv.window,
                join(&cv.values),
                if cv.complete { "" } else { ", ..." }
            ));
            rec.text.push(format!("nu+ from V = {}", cv.nu_plus()));
            rec.result("companion_v", vk.to_string());
            rec.result("cable_v", join(&cv.values));
            rec.result("complete", cv.complete);
            rec.result("nu_plus", nu_value(&cv.nu_plus()));
            seq_nu_plus(&vk)
        }
        (None, Some(n)) => {
            rec = rec.input("nu", n);
            n
        }
        (None, None) => unreachable!("clap requires a companion"),
    };

    rec.result("companion_nu_plus", companion_nu);
    let regime = Regime::of(companion_nu, &params);
    rec.regime = Some(regime.tag().to_string());
    match nu_plus_cable(companion_nu, &params) {
        Ok(f) => {
            rec.text.push(format!("formula: nu+ = {}", f.value));
            rec.result("formula", f.value);
            if f.regime == Regime::ProofGap {
                rec.warnings.push(format!(
                    "q = {} lies just below (2nu-1)p+1 = {}; the formula is stated there but not proved",
                    params.q(),
                    (2 * companion_nu as i64 - 1) * params.p() as i64 + 1
                ));
            }
        }
        Err(Error::OutOfRegime { lower_bound, .. }) => {
            rec.text
                .push(format!("formula does not apply; nu+ >= {lower_bound}"));
            rec.result("lower_bound", lower_bound);
        }
        Err(e) => return Err(e),
    }
    if regime == Regime::ProofGap {
        let lb = nu_plus_cable_lower_bound(companion_nu, &params)?;
        rec.result("lower_bound", lb);
    }
    if let Some(g) = g4 {
        rec = rec.input("g4", g);
        let ub = g4_cable_upper_bound(g, &params);
        rec.text.push(format!("g4 <= {ub}"));
        rec.result("g4_upper_bound", ub);
    }
    Ok((rec, true))
}

pub fn nu_plus(knot: &str) -> Result<Outcome> {
    let expr = parse_knot_expr(knot)?;
    let eval = eval_knot(&expr)?;
    let mut rec = OutputRecord::new("nu-plus").input("knot", expr.to_string());
    for level in &eval.levels {
        let mut line = format!("{}: nu+ {}", level.knot, level.nu_plus);
        if let Some(r) = level.regime {
            line.push_str(&format!(" [{r}]"));
        }
        rec.text.push(line);
        if let Some(n) = &level.note {
            rec.warnings.push(format!("{}: {n}", level.knot));
        }
    }
    rec.text
        .push(match (eval.complete, eval.v_prefix.is_empty()) {
            (true, _) => format!("V = {}", join(&eval.v_prefix)),
            (false, true) => "V unknown".to_string(),
            (false, false) => format!("V = {}, ...", join(&eval.v_prefix)),
        });
    rec.result("v", join(&eval.v_prefix));
    rec.result("complete", eval.complete);
    rec.result("nu_plus", nu_value(&eval.nu_plus));
    rec.result(
        "levels",
        Value::Array(
            eval.levels
                .iter()
                .map(|l| {
                    json!({
                        "knot": l.knot,
                        "regime": l.regime.map(|r| r.tag()),
                        "nu_plus": nu_value(&l.nu_plus),
                        "complete": l.complete,
                    })
                })
                .collect(),
        ),
    );
    rec.regime = eval.regime().map(|r| r.tag().to_string());
    Ok((rec, true))
}

pub fn tables() -> OutputRecord {
    let report = run_tables();
    let mut rec = OutputRecord::new("tables");
    rec.text.push("correction terms, i = 0..6".into());
    for row in &report.correction_terms {
        let cells: Vec<String> = row
            .cells
            .iter()
            .map(|c| {
                if c.matches() {
                    c.computed.to_string()
                } else {
                    format!("{}*", c.computed)
                }
            })
            .collect();
        rec.text
            .push(format!("  L({},{}): {}", row.p, row.q, cells.join(", ")));
        rec.result(
            &format!("L({},{})", row.p, row.q),
            Value::Array(
                row.cells
                    .iter()
                    .map(|c| json!(c.computed.to_string()))
                    .collect(),
            ),
        );
    }
    rec.text.push("cable (3,5) of the unknot, i = 0..6".into());
    for row in &report.projections {
        rec.text
            .push(format!("  {}: {}", row.name, join(&row.computed)));
        rec.result(row.name, json!(row.computed));
    }
    rec.result(
        "matches",
        json!(report
            .correction_terms
            .iter()
            .flat_map(|r| &r.cells)
            .filter(|c| c.matches())
            .count()),
    );
    for (row, cell) in report.deviations() {
        rec.warnings.push(format!(
            "* L({},{}) at {}: computed {}, reference table lists {}",
            row.p, row.q, cell.label, cell.computed, cell.reference
        ));
    }
    rec.warnings.extend(report.notes.iter().cloned());
    if !report.all_accepted() {
        rec.warnings
            .push("tables do not match the reference values".into());
    }
    rec
}

pub fn verify(max_p: u64, seed: u64) -> Result<Outcome> {
    if max_p < 2 {
        return Err(Error::Domain(format!(
            "--max-p must be at least 2, got {max_p}"
        )));
    }
    let report = run_verify(max_p, seed);
    let mut rec = OutputRecord::new("verify")
        .input("max_p", max_p)
        .input("seed", seed);
    for s in &report.suites {
        let status = if s.passed() { "PASS" } else { "FAIL" };
        rec.text.push(format!(
            "{status} {:<30} {:>8} cases  {:>9.3?}  {}",
            s.name, s.cases, s.elapsed, s.range
        ));
        if let Some(c) = &s.counterexample {
            rec.text.push(format!("     counterexample: {c}"));
        }
        rec.result(
            s.name,
            json!({
                "passed": s.passed(),
                "cases": s.cases,
                "range": s.range,
                "counterexample": s.counterexample,
            }),
        );
    }
    rec.result("passed", report.passed());
    Ok((rec, report.passed()))
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
