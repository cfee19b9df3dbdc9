//! `nu+` of cable knots.
//!
//! Comparing the surgery formula on both sides of
//! `S^3_{pq}(K_{p,q}) = S^3_{q/p}(K) # L(p,q)` with the same identity for the
//! unknot gives, for `i <= pq/2`,
//!
//! ```text
//! V_i(K_{p,q}) = V_i(T_{p,q}) + max{ V_floor(phi1(i)/p)(K), V_floor((p+q-1-phi1(i))/p)(K) }
//! ```
//!
//! From this, `nu+(K_{p,q}) = p nu+(K) + (p-1)(q-1)/2` whenever
//! `q >= (2 nu+(K) - 1) p + 1`, and `nu+(K_{p,q}) >= pq/2` otherwise.

use std::fmt;

use crate::error::{Error, Result};
use crate::spinc::{phi1_at, CableParams};
use crate::vseq::{nu_plus, v_torus, VSequence};

/// Which statement about `nu+(K_{p,q})` applies to given `(nu+(K), p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `q >= (2 nu - 1) p + 1`: the cabling formula is proved.
    ProofBacked,
    /// `q` is one of the two values `(2 nu - 1) p - 1`, `(2 nu - 1) p`. The
    /// formula is asserted for them but the argument does not cover them.
    ProofGap,
    /// Below both: only the lower bound `ceil(pq/2)` is known.
    LowerBoundOnly,
}

impl Regime {
    pub fn of(nu: u64, params: &CableParams) -> Regime {
        let threshold = (2 * nu as i128 - 1) * params.p() as i128 + 1;
        let q = params.q() as i128;
        if q >= threshold {
            Regime::ProofBacked
        } else if q >= threshold - 2 {
            Regime::ProofGap
        } else {
            Regime::LowerBoundOnly
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Regime::ProofBacked => "proof-backed",
            Regime::ProofGap => "stated-proof-gap",
            Regime::LowerBoundOnly => "lower-bound-only",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// V-sequence of a cable over the window `0 <= i <= floor(pq/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CableV {
    /// `V_0, V_1, ...`, cut at the first zero when one occurs in the window.
    pub values: Vec<u64>,
    /// The prefix reached zero inside the window, so it is the whole sequence.
    pub complete: bool,
    /// `floor(pq/2)`.
    pub window: u64,
}

impl CableV {
    pub fn sequence(&self) -> Option<VSequence> {
        if self.complete {
            VSequence::new(self.values.clone()).ok()
        } else {
            None
        }
    }

    /// Exact `nu+` when complete, otherwise the bound `window + 1`.
    pub fn nu_plus(&self) -> NuPlus {
        if self.complete {
            NuPlus::Exact(self.values.len() as u64 - 1)
        } else {
            NuPlus::AtLeast(self.window + 1)
        }
    }
}

/// V-sequence of `K_{p,q}` from that of `K`.
///
/// Fails if the result increases somewhere, which happens only for companion
/// sequences no knot has (for instance drops larger than one).
pub fn cable_v(vk: &VSequence, params: &CableParams) -> Result<CableV> {
    cable_v_scaled(vk, params, 1)
}

/// [`cable_v`] with the companion term multiplied by `coefficient`.
///
/// Only `coefficient = 1` is correct; other values exist so that the
/// reducible-surgery check can be shown to reject them.
pub fn cable_v_scaled(vk: &VSequence, params: &CableParams, coefficient: u64) -> Result<CableV> {
    let (p, q) = (params.p(), params.q());
    let window = params.pq() / 2;
    if p == 1 {
        // K_{1,q} is K
        return Ok(CableV {
            values: vk.values().to_vec(),
            complete: true,
            window,
        });
    }
    let torus = v_torus(p, q)?;
    let mut values = Vec::new();
    let mut complete = false;
    for i in 0..=window {
        let f = phi1_at(params, i as i64);
        let companion = vk.get(f / p).max(vk.get((p + q - 1 - f) / p));
        let v = torus.get(i) + coefficient * companion;
        if let Some(&prev) = values.last() {
            if v > prev {
                return Err(Error::MalformedSequence(format!(
                    "cable {params} of V = {vk} increases at index {i} ({prev} -> {v}); \
                     the companion sequence is not realized by a knot"
                )));
            }
        }
        values.push(v);
        if v == 0 {
            complete = true;
            break;
        }
    }
    Ok(CableV {
        values,
        complete,
        window,
    })
}

/// `nu+` of a cable by the cabling formula, tagged with the regime it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CableNu {
    pub value: u64,
    pub regime: Regime,
}

/// `p * nu + (p-1)(q-1)/2`.
///
/// Outside the proof-backed and proof-gap ranges this fails with
/// [`Error::OutOfRegime`], which carries the known lower bound.
pub fn nu_plus_cable(nu: u64, params: &CableParams) -> Result<CableNu> {
    let regime = Regime::of(nu, params);
    match regime {
        Regime::LowerBoundOnly => Err(Error::OutOfRegime {
            p: params.p(),
            q: params.q(),
            nu,
            lower_bound: half_up(params.pq()),
        }),
        _ => Ok(CableNu {
            value: params.p() * nu + params.genus_term(),
            regime,
        }),
    }
}

/// `ceil(pq/2)`, valid when `q < (2 nu - 1) p + 1`.
pub fn nu_plus_cable_lower_bound(nu: u64, params: &CableParams) -> Result<u64> {
    match Regime::of(nu, params) {
        Regime::ProofBacked => Err(Error::FormulaRegime {
            p: params.p(),
            q: params.q(),
            nu,
        }),
        _ => Ok(half_up(params.pq())),
    }
}

/// `g_4(K_{p,q})` for a knot with `nu+(K) = g_4(K) = n`.
///
/// The caller vouches for `nu+(K) = g_4(K)`; the regime rules are those of
/// [`nu_plus_cable`].
pub fn g4_cable(n: u64, params: &CableParams) -> Result<CableNu> {
    nu_plus_cable(n, params)
}

/// Genus of the surface built from `p` parallel copies of a slice surface for
/// `K` joined by `(p-1)q` half-twisted bands.
pub fn g4_cable_upper_bound(g4: u64, params: &CableParams) -> u64 {
    params.p() * g4 + params.genus_term()
}

/// `nu+` of a quasi-alternating knot with signature `sigma`.
pub fn nu_plus_quasi_alternating(sigma: i64) -> Result<u64> {
    if sigma % 2 != 0 {
        return Err(Error::Domain(format!(
            "knot signature must be even, got {sigma}"
        )));
    }
    Ok(if sigma >= 0 {
        0
    } else {
        sigma.unsigned_abs() / 2
    })
}

fn half_up(n: u64) -> u64 {
    n.div_ceil(2)
}

/// A knot built from the unknot, torus knots, explicit V-sequences and cabling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotExpr {
    Unknot,
    Torus(CableParams),
    Cable(CableParams, Box<KnotExpr>),
    ExplicitV(VSequence),
}

impl KnotExpr {
    pub fn torus(p: u64, q: u64) -> Result<Self> {
        Ok(KnotExpr::Torus(CableParams::new(p, q)?))
    }

    pub fn cable(p: u64, q: u64, companion: KnotExpr) -> Result<Self> {
        Ok(KnotExpr::Cable(
            CableParams::new(p, q)?,
            Box::new(companion),
        ))
    }

    pub fn explicit(values: Vec<u64>) -> Result<Self> {
        Ok(KnotExpr::ExplicitV(VSequence::new(values)?))
    }
}

/// Renders in the grammar accepted by [`crate::expr::parse_knot_expr`].
impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("unknot"),
            KnotExpr::Torus(c) => write!(f, "torus({},{})", c.p(), c.q()),
            KnotExpr::Cable(c, k) => write!(f, "cable({},{}; {})", c.p(), c.q(), k),
            KnotExpr::ExplicitV(v) => write!(f, "v[{v}]"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NuPlus {
    Exact(u64),
    AtLeast(u64),
}

impl NuPlus {
    pub fn exact(&self) -> Option<u64> {
        match self {
            NuPlus::Exact(n) => Some(*n),
            NuPlus::AtLeast(_) => None,
        }
    }

    /// The exact value, or the lower bound.
    pub fn floor(&self) -> u64 {
        match self {
            NuPlus::Exact(n) | NuPlus::AtLeast(n) => *n,
        }
    }
}

impl fmt::Display for NuPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuPlus::Exact(n) => write!(f, "{n}"),
            NuPlus::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

/// What happened at one node of the expression tree, innermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub knot: String,
    pub regime: Option<Regime>,
    pub nu_plus: NuPlus,
    pub complete: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotEval {
    /// `V_0, V_1, ...`; the whole sequence when `complete`, otherwise a
    /// positive prefix (possibly empty).
    pub v_prefix: Vec<u64>,
    pub complete: bool,
    pub nu_plus: NuPlus,
    pub levels: Vec<LevelReport>,
}

impl KnotEval {
    pub fn sequence(&self) -> Option<VSequence> {
        if self.complete {
            VSequence::new(self.v_prefix.clone()).ok()
        } else {
            None
        }
    }

    /// Regime of the outermost cable, if any.
    pub fn regime(&self) -> Option<Regime> {
        self.levels.last().and_then(|l| l.regime)
    }

    fn leaf(knot: &KnotExpr, v: VSequence) -> KnotEval {
        let nu = NuPlus::Exact(nu_plus(&v));
        KnotEval {
            levels: vec![LevelReport {
                knot: knot.to_string(),
                regime: None,
                nu_plus: nu,
                complete: true,
                note: None,
            }],
            v_prefix: v.values().to_vec(),
            complete: true,
            nu_plus: nu,
        }
    }
}

/// Evaluates the V-sequence and `nu+` of a knot expression.
///
/// Each cable is computed on its window `i <= floor(pq/2)`. When the sequence
/// does not vanish inside the window the result is only a lower bound, and
/// any cable built on top of it is bounded rather than computed.
pub fn eval_knot(expr: &KnotExpr) -> Result<KnotEval> {
    match expr {
        KnotExpr::Unknot => Ok(KnotEval::leaf(expr, VSequence::zero())),
        KnotExpr::Torus(c) => Ok(KnotEval::leaf(expr, v_torus(c.p(), c.q())?)),
        KnotExpr::ExplicitV(v) => Ok(KnotEval::leaf(expr, v.clone())),
        KnotExpr::Cable(params, companion) => {
            let inner = eval_knot(companion)?;
            let mut levels = inner.levels.clone();
            let Some(vk) = inner.sequence() else {
                let bound = bound_over_incomplete(inner.nu_plus.floor(), params);
                levels.push(LevelReport {
                    knot: expr.to_string(),
                    regime: None,
                    nu_plus: NuPlus::AtLeast(bound),
                    complete: false,
                    note: Some(format!(
                        "companion {companion} is only bounded (nu+ {}); \
                         bounded by min(ceil(pq/2), p*bound + (p-1)(q-1)/2)",
                        inner.nu_plus
                    )),
                });
                return Ok(KnotEval {
                    v_prefix: Vec::new(),
                    complete: false,
                    nu_plus: NuPlus::AtLeast(bound),
                    levels,
                });
            };
            let nu_k = nu_plus(&vk);
            let regime = Regime::of(nu_k, params);
            let cv = cable_v(&vk, params)?;
            let nu = cv.nu_plus();
            if regime == Regime::ProofBacked {
                let expected = params.p() * nu_k + params.genus_term();
                if nu != NuPlus::Exact(expected) {
                    return Err(Error::Inconsistency(format!(
                        "cable {params} of {companion}: sequence gives nu+ {nu}, formula gives {expected}"
                    )));
                }
            }
            let note = (!cv.complete).then(|| {
                format!(
                    "sequence positive through i = {}; only a lower bound is known",
                    cv.window
                )
            });
            levels.push(LevelReport {
                knot: expr.to_string(),
                regime: Some(regime),
                nu_plus: nu,
                complete: cv.complete,
                note,
            });
            Ok(KnotEval {
                v_prefix: cv.values,
                complete: cv.complete,
                nu_plus: nu,
                levels,
            })
        }
    }
}

/// Lower bound for `nu+(K_{p,q})` knowing only `nu+(K) >= bound`.
fn bound_over_incomplete(bound: u64, params: &CableParams) -> u64 {
    half_up(params.pq()).min(params.p() * bound + params.genus_term())
}
