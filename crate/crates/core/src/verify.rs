//! Property sweeps over the whole library.
//!
//! Each suite reports how many cases it checked and the first counterexample
//! it found. [`run_verify`] runs them all.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cabling::{cable_v, cable_v_scaled, nu_plus_cable, KnotExpr, NuPlus, Regime};
use crate::exactnum::Rational;
use crate::expr::parse_knot_expr;
use crate::lens::{conj_label, d_lens, d_lens_recursion_step, LensSpace, SpincIndex};
use crate::spinc::{phi1, phi1_at, phi2, phi2_at, CableParams};
use crate::tables::run_tables;
use crate::vseq::{d_surgery, nu_plus, v_torus, v_torus_oracle, VSequence};

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub range: String,
    pub cases: u64,
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub max_p: u64,
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

/// Outcome of a sweep body: number of cases, or the first counterexample.
type Sweep = Result<u64, String>;

fn suite(name: &'static str, range: String, body: impl FnOnce() -> Sweep) -> SuiteResult {
    let start = Instant::now();
    let (cases, counterexample) = match body() {
        Ok(n) => (n, None),
        Err(e) => (0, Some(e)),
    };
    SuiteResult {
        name,
        range,
        cases,
        counterexample,
        elapsed: start.elapsed(),
    }
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lens_pairs(max_p: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=max_p).flat_map(|p| (1..p).filter(move |q| p.gcd(q) == 1).map(move |q| (p, q)))
}

fn d(p: u64, q: u64, i: i64) -> Result<Rational, String> {
    d_lens(p, q, i).map_err(|e| e.to_string())
}

fn label(i: i64, m: u64) -> SpincIndex {
    SpincIndex::new(i, m).expect("positive modulus")
}

/// Commutativity, distributivity, and canonical form over seeded random
/// operation chains, checked against cross-multiplication.
pub fn rational_arithmetic(seed: u64, chains: u64) -> SuiteResult {
    suite(
        "rational-arithmetic",
        format!("{chains} chains of 10 operations, seed {seed}"),
        || {
            let mut rng = StdRng::seed_from_u64(seed);
            let rand_rat = |rng: &mut StdRng| {
                let n: i64 = rng.gen_range(-1000..=1000);
                let d: i64 = rng.gen_range(1..=200) * if rng.gen_bool(0.5) { 1 } else { -1 };
                (n, d)
            };
            let mut cases = 0;
            for _ in 0..chains {
                let (n, dd) = rand_rat(&mut rng);
                let mut acc = Rational::new(n, dd).expect("nonzero");
                // the same value as an unreduced pair
                let mut raw = (BigInt::from(n), BigInt::from(dd));
                for _ in 0..10 {
                    let (n, dd) = rand_rat(&mut rng);
                    let x = Rational::new(n, dd).expect("nonzero");
                    let (bn, bd) = (BigInt::from(n), BigInt::from(dd));
                    match rng.gen_range(0..3) {
                        0 => {
                            check(&acc + &x == &x + &acc, || {
                                format!("{acc} + {x} not commutative")
                            })?;
                            acc = &acc + &x;
                            raw = (&raw.0 * &bd + &bn * &raw.1, &raw.1 * &bd);
                        }
                        1 => {
                            acc = &acc - &x;
                            raw = (&raw.0 * &bd - &bn * &raw.1, &raw.1 * &bd);
                        }
                        _ => {
                            let y = Rational::from_integer(rng.gen_range(-5i64..=5));
                            check(&acc * &(&x + &y) == &(&acc * &x) + &(&acc * &y), || {
                                format!("{acc} * ({x} + {y}) does not distribute")
                            })?;
                            acc = &acc * &x;
                            raw = (&raw.0 * &bn, &raw.1 * &bd);
                        }
                    }
                    cases += 1;
                    let canonical =
                        acc.denom() > &BigInt::from(0) && acc.numer().gcd(acc.denom()).is_one();
                    check(canonical, || format!("{acc} not in canonical form"))?;
                    check(acc.numer() * &raw.1 == &raw.0 * acc.denom(), || {
                        format!("{acc} disagrees with {}/{}", raw.0, raw.1)
                    })?;
                }
            }
            Ok(cases)
        },
    )
}

/// `d(L(p,q), i) = d(L(p,q), J(i))` for every label.
pub fn lens_conjugation_symmetry(max_p: u64) -> SuiteResult {
    suite(
        "lens-conjugation-symmetry",
        format!("coprime 2 <= p <= {max_p}, 1 <= q < p, all labels"),
        || {
            let mut cases = 0;
            for (p, q) in lens_pairs(max_p) {
                for i in 0..p as i64 {
                    let j = conj_label(p, q, label(i, p)).map_err(|e| e.to_string())?;
                    let (a, b) = (d(p, q, i)?, d(p, q, j.value() as i64)?);
                    check(a == b, || {
                        format!("L({p},{q}): d({i}) = {a} but d({}) = {b}", j.value())
                    })?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
    )
}

/// The recursion evaluated at `p <= i < p + q` agrees with label `i mod p`.
pub fn lens_extended_window(max_p: u64) -> SuiteResult {
    suite(
        "lens-extended-window",
        format!("coprime 2 <= p <= {max_p}, 1 <= q < p, p <= i < p + q"),
        || {
            let mut cases = 0;
            for (p, q) in lens_pairs(max_p) {
                for i in p..p + q {
                    let step = d_lens_recursion_step(p, q, i).map_err(|e| e.to_string())?;
                    let reduced = d(p, q, (i % p) as i64)?;
                    check(step == reduced, || {
                        format!(
                            "L({p},{q}) at {i}: recursion gives {step}, label {} gives {reduced}",
                            i % p
                        )
                    })?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
    )
}

/// `d(L(p,q), j + q) - d(L(p,q), j) = (2j + 1 - p)/p` for `0 <= j < p`.
pub fn lens_shift_delta(max_p: u64) -> SuiteResult {
    suite(
        "lens-shift-delta",
        format!("coprime 2 <= p <= {max_p}, 1 <= q < p, 0 <= j < p"),
        || {
            let mut cases = 0;
            for (p, q) in lens_pairs(max_p) {
                for j in 0..p as i64 {
                    let delta = d(p, q, j + q as i64)? - d(p, q, j)?;
                    let expected = Rational::new(2 * j + 1 - p as i64, p as i64).expect("p > 0");
                    check(delta == expected, || {
                        format!("L({p},{q}), j = {j}: delta {delta}, expected {expected}")
                    })?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
    )
}

/// Affine step and conjugation equivariance of the two projections.
pub fn spinc_projections(max_p: u64) -> SuiteResult {
    let p_max = max_p.min(9);
    suite(
        "spinc-projections",
        format!("coprime 1 <= p <= {p_max}, 1 <= q <= 13, all labels mod pq"),
        || {
            let mut cases = 0;
            for p in 1..=p_max {
                for q in 1..=13 {
                    let Ok(c) = CableParams::new(p, q) else {
                        continue;
                    };
                    let pq = c.pq();
                    let err = |e: crate::Error| e.to_string();
                    for i in 0..pq as i64 {
                        let a = label(i, pq);
                        let (f1, f2) = (phi1(&c, a).map_err(err)?, phi2(&c, a).map_err(err)?);
                        let (g1, g2) =
                            (phi1(&c, a + 1).map_err(err)?, phi2(&c, a + 1).map_err(err)?);
                        check(f1 + 1 == g1 && f2 + 1 == g2, || {
                            format!("({p},{q}) i = {i}: projections are not unit steps")
                        })?;
                        let j = conj_label(pq, 1, a).map_err(err)?;
                        check(
                            phi1(&c, j).map_err(err)? == conj_label(q, p, f1).map_err(err)?,
                            || format!("({p},{q}) i = {i}: phi1 does not commute with conjugation"),
                        )?;
                        check(
                            phi2(&c, j).map_err(err)? == conj_label(p, q, f2).map_err(err)?,
                            || format!("({p},{q}) i = {i}: phi2 does not commute with conjugation"),
                        )?;
                        cases += 1;
                    }
                }
            }
            Ok(cases)
        },
    )
}

/// Correction-term and Alexander-polynomial routes to `V(T_{p,q})` agree,
/// and `nu+(T_{p,q}) = (p-1)(q-1)/2`.
pub fn torus_oracle_equivalence(q_max: u64) -> SuiteResult {
    suite(
        "torus-oracle-equivalence",
        format!("coprime 2 <= p < q <= {q_max}"),
        || {
            let mut cases = 0;
            for q in 3..=q_max {
                for p in 2..q {
                    if p.gcd(&q) != 1 {
                        continue;
                    }
                    let a = v_torus(p, q).map_err(|e| e.to_string())?;
                    let b = v_torus_oracle(p, q).map_err(|e| e.to_string())?;
                    check(a == b, || format!("T({p},{q}): {a} vs oracle {b}"))?;
                    let genus = (p - 1) * (q - 1) / 2;
                    check(nu_plus(&a) == genus, || {
                        format!("T({p},{q}): nu+ {} != {genus}", nu_plus(&a))
                    })?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
    )
}

fn sample_sequences() -> Vec<VSequence> {
    [
        &[0][..],
        &[1, 0],
        &[2, 1, 1, 1, 0],
        &[1, 1, 0],
        &[3, 2, 2, 1, 1, 0],
        &[4, 0],
    ]
    .iter()
    .map(|v| VSequence::new(v.to_vec()).expect("fixture"))
    .collect()
}

/// `d(S^3_{p/q}(K), i) = d(S^3_{p/q}(K), J(i))`.
pub fn surgery_conjugation_symmetry(max_p: u64) -> SuiteResult {
    let p_max = max_p.min(20);
    suite(
        "surgery-conjugation-symmetry",
        format!("coprime 1 <= p <= {p_max}, 1 <= q <= 20, sample V-sequences"),
        || {
            let seqs = sample_sequences();
            let mut cases = 0;
            for p in 1..=p_max {
                for q in 1..=20 {
                    if LensSpace::new(p, q).is_err() {
                        continue;
                    }
                    for v in &seqs {
                        for i in 0..p as i64 {
                            let err = |e: crate::Error| e.to_string();
                            let j = conj_label(p, q, label(i, p)).map_err(err)?;
                            let a = d_surgery(p, q, label(i, p), v).map_err(err)?;
                            let b = d_surgery(p, q, j, v).map_err(err)?;
                            check(a == b, || {
                                format!("{p}/{q} surgery on V = {v}: label {i} gives {a}, conjugate {b}")
                            })?;
                            cases += 1;
                        }
                    }
                }
            }
            Ok(cases)
        },
    )
}

/// Both sides of `S^3_{pq}(K_{p,q}) = S^3_{q/p}(K) # L(p,q)` for `K = T_{2,3}`:
///
/// ```text
/// d(L(pq,1), i) - 2 V_i(K_{p,q})
///     = d(L(q,p), phi1(i)) + d(L(p,q), phi2(i)) - 2 max{V_floor(phi1/p)(K), V_floor((p+q-1-phi1)/p)(K)}
/// ```
///
/// for `i <= pq/2`, with the cable's sequence from [`cable_v_scaled`] at the
/// given coefficient.
pub fn reducible_surgery_identity(coefficient: u64) -> SuiteResult {
    suite(
        "reducible-surgery-identity",
        format!("K = T(2,3), coprime p <= 3, q <= 7, i <= pq/2, coefficient {coefficient}"),
        || {
            let err = |e: crate::Error| e.to_string();
            let k = v_torus(2, 3).map_err(err)?;
            let mut cases = 0;
            for p in 1..=3 {
                for q in 1..=7 {
                    let Ok(c) = CableParams::new(p, q) else {
                        continue;
                    };
                    let cv = cable_v_scaled(&k, &c, coefficient).map_err(err)?;
                    let seq = cv.sequence();
                    let pq = c.pq();
                    for i in 0..=pq / 2 {
                        // V_i >= V_{pq-i} for i <= pq/2, so the max picks V_i
                        let vi = cv.values.get(i as usize).copied().unwrap_or(0);
                        let lhs = d(pq, 1, i as i64)? - Rational::from_integer(2 * vi);
                        if let Some(seq) = &seq {
                            let full = d_surgery(pq, 1, label(i as i64, pq), seq).map_err(err)?;
                            check(full == lhs, || {
                                format!("({p},{q}) i = {i}: surgery formula {full} vs {lhs}")
                            })?;
                        }
                        let f1 = phi1_at(&c, i as i64);
                        let f2 = phi2_at(&c, i as i64);
                        let m = k.get(f1 / p).max(k.get((p + q - 1 - f1) / p));
                        let rhs = d(q, p, f1 as i64)? + d(p, q, f2 as i64)?
                            - Rational::from_integer(2 * m);
                        check(lhs == rhs, || {
                            format!("cable ({p},{q}) of T(2,3), i = {i}: {lhs} != {rhs}")
                        })?;
                        cases += 1;
                    }
                }
            }
            Ok(cases)
        },
    )
}

/// Companion sequences for the cabling-formula sweep.
pub const THEOREM_COMPANIONS: [&[u64]; 3] = [&[0], &[1, 0], &[2, 1, 1, 1, 0]];

/// `nu+(cable_v(V, (p,q))) = p nu+(V) + (p-1)(q-1)/2` wherever the formula
/// is proved, plus independence from the companion's entries.
pub fn cabling_theorem_agreement() -> SuiteResult {
    suite(
        "cabling-theorem-agreement",
        "companions (0), (1,0), (2,1,1,1,0); coprime p <= 4, q <= 19, q >= (2nu-1)p+1".into(),
        || {
            let err = |e: crate::Error| e.to_string();
            let mut cases = 0;
            for vk in THEOREM_COMPANIONS {
                let vk = VSequence::new(vk.to_vec()).map_err(err)?;
                let nu = nu_plus(&vk);
                for p in 1..=4 {
                    for q in 1..=19 {
                        let Ok(c) = CableParams::new(p, q) else {
                            continue;
                        };
                        if Regime::of(nu, &c) != Regime::ProofBacked {
                            continue;
                        }
                        let cv = cable_v(&vk, &c).map_err(err)?;
                        let formula = nu_plus_cable(nu, &c).map_err(err)?;
                        check(cv.nu_plus() == NuPlus::Exact(formula.value), || {
                            format!(
                                "cable {c} of V = {vk}: sequence nu+ {} vs formula {}",
                                cv.nu_plus(),
                                formula.value
                            )
                        })?;
                        check(cv.values.windows(2).all(|w| w[0] >= w[1]), || {
                            format!("cable {c} of V = {vk} is not non-increasing")
                        })?;
                        cases += 1;
                    }
                }
            }
            // same nu+, different entries below it
            let same_nu = [&[1, 1, 1, 0][..], &[2, 1, 1, 0], &[3, 2, 1, 0]];
            for p in 1..=4 {
                for q in 1..=19 {
                    let Ok(c) = CableParams::new(p, q) else {
                        continue;
                    };
                    if Regime::of(3, &c) != Regime::ProofBacked {
                        continue;
                    }
                    let nus = same_nu
                        .iter()
                        .map(|v| {
                            let v = VSequence::new(v.to_vec()).map_err(err)?;
                            Ok(cable_v(&v, &c).map_err(err)?.nu_plus())
                        })
                        .collect::<Result<Vec<_>, String>>()?;
                    check(nus.windows(2).all(|w| w[0] == w[1]), || {
                        format!("cable {c}: nu+ depends on companion entries: {nus:?}")
                    })?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
    )
}

/// Random expressions survive render -> parse.
pub fn knot_expr_round_trip(seed: u64, count: u64) -> SuiteResult {
    suite(
        "knot-expr-round-trip",
        format!("{count} random expressions, seed {seed}"),
        || {
            let mut rng = StdRng::seed_from_u64(seed ^ 0x6b6e6f74);
            for n in 0..count {
                let e = random_expr(&mut rng, 4);
                let text = e.to_string();
                let back = parse_knot_expr(&text).map_err(|err| format!("{text:?}: {err}"))?;
                check(back == e, || format!("case {n}: {text:?} parsed to {back}"))?;
            }
            Ok(count)
        },
    )
}

fn random_expr(rng: &mut StdRng, depth: u32) -> KnotExpr {
    let params = |rng: &mut StdRng| loop {
        if let Ok(c) = CableParams::new(rng.gen_range(1..40), rng.gen_range(1..40)) {
            return c;
        }
    };
    match rng.gen_range(0..if depth == 0 { 3 } else { 4 }) {
        0 => KnotExpr::Unknot,
        1 => KnotExpr::Torus(params(rng)),
        2 => {
            let len = rng.gen_range(0..6);
            let mut xs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..9)).collect();
            xs.sort_unstable_by(|a, b| b.cmp(a));
            xs.push(0);
            KnotExpr::ExplicitV(VSequence::new(xs).expect("sorted, ends in 0"))
        }
        _ => KnotExpr::Cable(params(rng), Box::new(random_expr(rng, depth - 1))),
    }
}

pub fn table_reproduction() -> SuiteResult {
    suite("table-reproduction", "labels 0..=6".into(), || {
        let report = run_tables();
        let deviations: Vec<_> = report
            .deviations()
            .map(|(r, c)| {
                format!(
                    "L({},{}) at {}: {} vs {}",
                    r.p, r.q, c.label, c.computed, c.reference
                )
            })
            .collect();
        check(report.all_accepted(), || {
            let rows: Vec<_> = report
                .projections
                .iter()
                .filter(|r| !r.matches())
                .map(|r| r.name)
                .collect();
            format!("deviations {deviations:?}, mismatched rows {rows:?}")
        })?;
        Ok(report
            .correction_terms
            .iter()
            .map(|r| r.cells.len() as u64)
            .sum::<u64>()
            + report
                .projections
                .iter()
                .map(|r| r.computed.len() as u64)
                .sum::<u64>())
    })
}

/// Runs every suite. Lens sweeps cover `2 <= p <= max_p`; the torus sweep
/// covers `q <= max_p` clamped to `[3, 13]`.
pub fn run_verify(max_p: u64, seed: u64) -> VerifyReport {
    let suites = vec![
        rational_arithmetic(seed, 5_000),
        lens_conjugation_symmetry(max_p),
        lens_extended_window(max_p),
        lens_shift_delta(max_p),
        spinc_projections(max_p),
        torus_oracle_equivalence(max_p.clamp(3, 13)),
        surgery_conjugation_symmetry(max_p),
        reducible_surgery_identity(1),
        cabling_theorem_agreement(),
        knot_expr_round_trip(seed, 500),
        table_reproduction(),
    ];
    VerifyReport {
        max_p,
        seed,
        suites,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let r = run_verify(2, 0);
        for s in &r.suites {
            assert!(s.passed(), "{}: {:?}", s.name, s.counterexample);
        }
    }

    #[test]
    fn printed_coefficient_is_rejected() {
        let s = reducible_surgery_identity(2);
        assert!(!s.passed());
    }
}
