//! Torsion coefficients of torus knots, computed from the Alexander polynomial.
//!
//! For an L-space knot (torus knots among them) `V_k = t_k`, where
//! `t_k = sum_{j >= 1} j * a_{k+j}` and `a_i` are the coefficients of the
//! symmetrized Alexander polynomial. This route shares nothing with the
//! correction-term computation in [`super::v_torus`] and is used to check it.
//! It is not a general-knot API.

use crate::error::{Error, Result};
use crate::spinc::CableParams;

use super::VSequence;

/// Coefficients `t_0, ..., t_g` of a symmetric Alexander polynomial of degree `2g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionCoefficients {
    pub t: Vec<i64>,
}

/// Alexander polynomial of `T_{p,q}` as coefficients of `x^0 .. x^{(p-1)(q-1)}`.
///
/// Exact long division of `(x^{pq} - 1)(x - 1)` by `(x^p - 1)(x^q - 1)`.
pub fn torus_alexander(p: u64, q: u64) -> Result<Vec<i64>> {
    let params = CableParams::new(p, q)?;
    let (p, q) = (params.p() as usize, params.q() as usize);
    let num = poly_mul(&binomial(p * q), &binomial(1));
    let den = poly_mul(&binomial(p), &binomial(q));
    let (quot, rem) = poly_divmod(&num, &den);
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::Inconsistency(format!(
            "Alexander polynomial division for T({p},{q}) left a remainder"
        )));
    }
    Ok(quot)
}

/// Torsion coefficients of a palindromic polynomial given from `x^0` upward.
pub fn torsion_coefficients(alexander: &[i64]) -> Result<TorsionCoefficients> {
    let deg = alexander.len().saturating_sub(1);
    if !deg.is_multiple_of(2) || alexander.iter().ne(alexander.iter().rev()) {
        return Err(Error::Domain(
            "Alexander polynomial must be palindromic of even degree".into(),
        ));
    }
    let g = deg / 2;
    // a_k sits at position g + k
    let a = |k: usize| alexander.get(g + k).copied().unwrap_or(0);
    let t = (0..=g)
        .map(|k| (1..=g - k).map(|j| j as i64 * a(k + j)).sum())
        .collect();
    Ok(TorsionCoefficients { t })
}

/// V-sequence of `T_{p,q}` via torsion coefficients.
pub fn v_torus_oracle(p: u64, q: u64) -> Result<VSequence> {
    let delta = torus_alexander(p, q)?;
    let tc = torsion_coefficients(&delta)?;
    let values =
        tc.t.iter()
            .map(|&t| {
                u64::try_from(t).map_err(|_| {
                    Error::Inconsistency(format!("negative torsion coefficient {t} for T({p},{q})"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
    VSequence::new(values)
}

/// `x^n - 1`.
fn binomial(n: usize) -> Vec<i64> {
    let mut c = vec![0; n + 1];
    c[0] = -1;
    c[n] += 1;
    c
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a monic polynomial. Returns `(quotient, remainder)`.
fn poly_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let mut rem = num.to_vec();
    if num.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alexander_polynomials() {
        assert_eq!(torus_alexander(2, 3).unwrap(), vec![1, -1, 1]);
        assert_eq!(torus_alexander(1, 5).unwrap(), vec![1]);
        // T(3,4): 1 - t + t^3 - t^5 + t^6
        assert_eq!(torus_alexander(3, 4).unwrap(), vec![1, -1, 0, 1, 0, -1, 1]);
        assert!(torus_alexander(3, 6).is_err());
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(torsion_coefficients(&[1, -1, 1]).unwrap().t, vec![1, 0]);
        assert!(torsion_coefficients(&[1, 2]).is_err());
        assert!(torsion_coefficients(&[1, 2, 3]).is_err());
    }

    #[test]
    fn oracle_sequences() {
        assert_eq!(v_torus_oracle(2, 3).unwrap().values(), &[1, 0]);
        assert_eq!(v_torus_oracle(3, 5).unwrap().values(), &[2, 1, 1, 1, 0]);
        assert_eq!(v_torus_oracle(1, 5).unwrap().values(), &[0]);
    }
}
