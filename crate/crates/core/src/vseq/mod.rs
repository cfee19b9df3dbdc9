//! V-sequences, `nu+`, and correction terms of surgeries.
//!
//! A knot's V-sequence `V_0 >= V_1 >= ... >= 0` is eventually zero and
//! determines the correction terms of all its positive rational surgeries:
//!
//! ```text
//! d(S^3_{p/q}(K), i) = d(L(p,q), i) - 2 max{ V_floor(i/q), V_floor((p+q-1-i)/q) }
//! ```
//!
//! `nu+` is the first index at which the sequence vanishes.

pub mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::lens::{d_lens, LensSpace, SpincIndex};
use crate::spinc::{phi1_at, phi2_at, CableParams};

pub use oracle::{torsion_coefficients, torus_alexander, v_torus_oracle, TorsionCoefficients};

/// A non-increasing, eventually zero sequence of nonnegative integers.
///
/// Stored up to and including its first zero; every later entry is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VSequence {
    values: Vec<u64>,
}

impl VSequence {
    /// Validates and trims trailing zeros down to one.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::MalformedSequence("empty sequence".into()));
        }
        if let Some(k) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::MalformedSequence(format!(
                "V_{k} = {} < V_{} = {}",
                values[k],
                k + 1,
                values[k + 1]
            )));
        }
        let Some(first_zero) = values.iter().position(|&v| v == 0) else {
            return Err(Error::MalformedSequence(format!(
                "last entry {} is not 0",
                values[values.len() - 1]
            )));
        };
        let mut values = values;
        values.truncate(first_zero + 1);
        Ok(VSequence { values })
    }

    /// The unknot's sequence `(0)`.
    pub fn zero() -> Self {
        VSequence { values: vec![0] }
    }

    /// `V_k`, zero past the stored prefix.
    pub fn get(&self, k: u64) -> u64 {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Opt-in check of the unit drop bound `V_k - V_{k+1} <= 1`.
    ///
    /// Returns the indices `k` where the drop exceeds one. The bound is not
    /// part of the type's invariants.
    pub fn unit_drop_violations(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] - w[1] > 1)
            .map(|(k, _)| k)
            .collect()
    }
}

impl fmt::Display for VSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for VSequence {
    type Err = Error;

    /// Parses the comma list form, e.g. `"2,1,1,1,0"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let t = part.trim();
            let v = t.parse::<u64>().map_err(|_| Error::Parse {
                pos: offset,
                msg: format!("expected a nonnegative integer, found {t:?}"),
            })?;
            values.push(v);
            offset += part.len() + 1;
        }
        VSequence::new(values)
    }
}

/// Smallest `k` with `V_k = 0`.
pub fn nu_plus(v: &VSequence) -> u64 {
    (v.values.len() - 1) as u64
}

/// Correction term of `p/q`-surgery on a knot with V-sequence `v`, at label `i`.
pub fn d_surgery(p: u64, q: u64, i: SpincIndex, v: &VSequence) -> Result<Rational> {
    let lens = LensSpace::new(p, q)?;
    i.expect_modulus(p)?;
    let i = i.value();
    let lo = v.get(i / q);
    let hi = v.get((p + q - 1 - i) / q);
    Ok(lens.d(i as i64) - Rational::from_integer(2 * lo.max(hi)))
}

/// V-sequence of the torus knot `T_{p,q}` from the reducible surgery on the
/// unknot's cable:
///
/// ```text
/// 2 V_i(T_{p,q}) = d(L(pq,1), i) - d(L(q,p), phi1(i)) - d(L(p,q), phi2(i))
/// ```
///
/// evaluated for `0 <= i <= (p-1)(q-1)/2`.
pub fn v_torus(p: u64, q: u64) -> Result<VSequence> {
    let params = CableParams::new(p, q)?;
    let genus = params.genus_term();
    let pq = params.pq();
    // the identity only pins down V_i for i <= pq/2
    if 2 * genus > pq {
        return Err(Error::Inconsistency(format!(
            "genus {genus} of T({p},{q}) exceeds pq/2"
        )));
    }
    let mut values = Vec::with_capacity(genus as usize + 1);
    for i in 0..=genus as i64 {
        let twice = d_lens(pq, 1, i)?
            - d_lens(q, p, phi1_at(&params, i) as i64)?
            - d_lens(p, q, phi2_at(&params, i) as i64)?;
        let v = twice.div_int(2)?;
        let v = v.to_i64().ok_or_else(|| {
            Error::Inconsistency(format!("V_{i}(T({p},{q})) = {v} is not an integer"))
        })?;
        let v = u64::try_from(v)
            .map_err(|_| Error::Inconsistency(format!("V_{i}(T({p},{q})) = {v} is negative")))?;
        let last = i as u64 == genus;
        if last != (v == 0) {
            return Err(Error::Inconsistency(format!(
                "V_{i}(T({p},{q})) = {v}, but the first zero must sit at index {genus}"
            )));
        }
        values.push(v);
    }
    VSequence::new(values).map_err(|e| Error::Inconsistency(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn v(xs: &[u64]) -> VSequence {
        VSequence::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn construction_and_trimming() {
        assert_eq!(v(&[1, 0, 0, 0]).values(), &[1, 0]);
        assert!(VSequence::new(vec![]).is_err());
        assert!(VSequence::new(vec![1, 2, 0]).is_err());
        assert!(VSequence::new(vec![2, 1]).is_err());
        assert_eq!(v(&[3, 1, 0]).get(1), 1);
        assert_eq!(v(&[3, 1, 0]).get(1_000), 0);
        assert_eq!(v(&[3, 1, 0]).get(u64::MAX), 0);
    }

    #[test]
    fn text_form() {
        let s: VSequence = "2,1,1,1,0".parse().unwrap();
        assert_eq!(s, v(&[2, 1, 1, 1, 0]));
        assert_eq!(s.to_string(), "2,1,1,1,0");
        assert_eq!(" 1 , 0 ".parse::<VSequence>().unwrap(), v(&[1, 0]));
        assert!(matches!(
            "1,x,0".parse::<VSequence>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "0,1".parse::<VSequence>(),
            Err(Error::MalformedSequence(_))
        ));
    }

    #[test]
    fn nu_plus_examples() {
        assert_eq!(nu_plus(&v(&[2, 1, 1, 1, 0])), 4);
        assert_eq!(nu_plus(&v(&[0])), 0);
        assert_eq!(nu_plus(&v(&[1, 0])), 1);
    }

    #[test]
    fn unit_drop_lint() {
        assert!(v(&[2, 1, 1, 1, 0]).unit_drop_violations().is_empty());
        assert_eq!(v(&[3, 1, 0]).unit_drop_violations(), vec![0]);
    }

    #[test]
    fn torus_sequences() {
        assert_eq!(v_torus(3, 5).unwrap(), v(&[2, 1, 1, 1, 0]));
        assert_eq!(v_torus(5, 3).unwrap(), v(&[2, 1, 1, 1, 0]));
        assert_eq!(v_torus(2, 3).unwrap(), v(&[1, 0]));
        assert_eq!(v_torus(1, 5).unwrap(), VSequence::zero());
        assert_eq!(v_torus(4, 1).unwrap(), VSequence::zero());
        assert_eq!(v_torus(2, 4), Err(Error::NotCoprime { p: 2, q: 4 }));
    }

    #[test]
    fn surgery_examples() {
        let label = |i, p| SpincIndex::new(i, p).unwrap();
        let trefoil = v(&[1, 0]);
        assert_eq!(
            d_surgery(1, 1, label(0, 1), &trefoil).unwrap(),
            rat(-2, 1).unwrap()
        );
        let t35 = v_torus(3, 5).unwrap();
        assert_eq!(
            d_surgery(15, 1, label(4, 15), &t35).unwrap(),
            rat(17, 30).unwrap()
        );
        for p in 1..12u64 {
            for q in 1..12u64 {
                if LensSpace::new(p, q).is_err() {
                    continue;
                }
                for i in 0..p as i64 {
                    assert_eq!(
                        d_surgery(p, q, label(i, p), &VSequence::zero()).unwrap(),
                        d_lens(p, q, i).unwrap()
                    );
                }
            }
        }
        assert!(d_surgery(5, 3, label(0, 4), &trefoil).is_err());
        assert!(d_surgery(4, 2, label(0, 4), &trefoil).is_err());
    }
}
