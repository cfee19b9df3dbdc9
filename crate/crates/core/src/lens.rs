//! Correction terms of lens spaces.
//!
//! `d(L(p,q), i)` is evaluated by the Euclidean recursion
//!
//! ```text
//! d(L(p,q), i) = ((2i + 1 - p - q)^2 - pq) / 4pq  -  d(L(q, p mod q), i mod q)
//! ```
//!
//! bottoming out at `d(L(p,1), i) = ((2i - p)^2 - p) / 4p` and `d(S^3) = 0`.
//! Labels follow the surgery identification: label `i` of `L(p,q)` is the
//! Spin^c structure `i` of `p/q`-surgery on the unknot.

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::Rational;

/// A lens space `L(p,q)` with `gcd(p,q) = 1`. `p = 1` is `S^3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Domain(format!(
                "lens space parameters must be positive, got ({p},{q})"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `(p, q mod p)`, or `(1, 1)` for `S^3`.
    pub fn canonical(&self) -> LensSpace {
        if self.p == 1 {
            LensSpace { p: 1, q: 1 }
        } else {
            LensSpace {
                p: self.p,
                q: self.q % self.p,
            }
        }
    }

    pub fn d(&self, i: i64) -> Rational {
        d_lens_unchecked(self.p, self.q, i)
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// A residue class `value mod modulus`, used to label Spin^c structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpincIndex {
    value: u64,
    modulus: u64,
}

impl SpincIndex {
    /// Reduces `value` into `[0, modulus)`.
    pub fn new(value: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::Domain(
                "Spin^c label modulus must be positive".into(),
            ));
        }
        Ok(SpincIndex {
            value: reduce(value, modulus),
            modulus,
        })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn expect_modulus(&self, modulus: u64) -> Result<()> {
        if self.modulus == modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                expected: modulus,
                found: self.modulus,
            })
        }
    }
}

impl Add<i64> for SpincIndex {
    type Output = SpincIndex;
    fn add(self, rhs: i64) -> SpincIndex {
        let m = self.modulus as i128;
        let v = (self.value as i128 + rhs as i128).rem_euclid(m);
        SpincIndex {
            value: v as u64,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for SpincIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Mathematical `value mod modulus` in `[0, modulus)`.
pub(crate) fn reduce(value: i64, modulus: u64) -> u64 {
    (value as i128).rem_euclid(modulus as i128) as u64
}

/// `d(L(p,q), i)`. The label is read mod `p` and `q` mod `p`.
pub fn d_lens(p: u64, q: u64, i: i64) -> Result<Rational> {
    LensSpace::new(p, q)?;
    Ok(d_lens_unchecked(p, q, i))
}

/// One application of the recursion at an unreduced label `i`.
///
/// For `p > q >= 1` the recursion holds on the window `0 <= i < p + q`; this
/// evaluates the right-hand side there without first reducing `i` mod `p`.
pub fn d_lens_recursion_step(p: u64, q: u64, i: u64) -> Result<Rational> {
    LensSpace::new(p, q)?;
    if q >= p {
        return Err(Error::Domain(format!(
            "the recursion step needs p > q, got ({p},{q})"
        )));
    }
    if i >= p + q {
        return Err(Error::Domain(format!(
            "label {i} is outside the window [0, {})",
            p + q
        )));
    }
    Ok(leading_term(p, q, i) - d_lens_unchecked(q, p % q, (i % q) as i64))
}

/// Every label of `L(p,q)`, in order `0..p`.
pub fn d_lens_all(p: u64, q: u64) -> Result<Vec<Rational>> {
    LensSpace::new(p, q)?;
    Ok((0..p).map(|i| d_lens_unchecked(p, q, i as i64)).collect())
}

/// Conjugation on the labels of `L(p,q)`: `i -> p + q - 1 - i (mod p)`.
pub fn conj_label(p: u64, q: u64, i: SpincIndex) -> Result<SpincIndex> {
    LensSpace::new(p, q)?;
    i.expect_modulus(p)?;
    let image = (p as i128 + q as i128 - 1 - i.value as i128).rem_euclid(p as i128);
    Ok(SpincIndex {
        value: image as u64,
        modulus: p,
    })
}

type Key = (u64, u64, u64);

fn memo() -> &'static Mutex<HashMap<Key, Rational>> {
    static MEMO: OnceLock<Mutex<HashMap<Key, Rational>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of cached `(p, q, i)` cells.
pub fn memo_len() -> usize {
    memo().lock().map(|m| m.len()).unwrap_or(0)
}

fn d_lens_unchecked(p: u64, q: u64, i: i64) -> Rational {
    if p == 1 {
        return Rational::zero();
    }
    let q = q % p;
    let i = reduce(i, p);
    if q == 1 {
        return closed_form_q1(p, i);
    }
    let key = (p, q, i);
    if let Some(v) = memo().lock().ok().and_then(|m| m.get(&key).cloned()) {
        return v;
    }
    let v = leading_term(p, q, i) - d_lens_unchecked(q, p % q, (i % q) as i64);
    // first writer wins, so every caller sees the same cell
    match memo().lock() {
        Ok(mut m) => m.entry(key).or_insert(v).clone(),
        Err(_) => v,
    }
}

fn leading_term(p: u64, q: u64, i: u64) -> Rational {
    let (p, q, i) = (BigInt::from(p), BigInt::from(q), BigInt::from(i));
    let t = BigInt::from(2) * &i + 1 - &p - &q;
    let pq = &p * &q;
    Rational::new(&t * &t - &pq, BigInt::from(4) * &pq).expect("4pq > 0")
}

/// `d(L(p,1), i)`, valid for `0 <= i <= p`.
fn closed_form_q1(p: u64, i: u64) -> Rational {
    debug_assert!(i <= p);
    let (p, i) = (BigInt::from(p), BigInt::from(i));
    let t = BigInt::from(2) * &i - &p;
    Rational::new(&t * &t - &p, BigInt::from(4) * &p).expect("4p > 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn r(n: i64, d: i64) -> Rational {
        rat(n, d).unwrap()
    }

    #[test]
    fn reference_values() {
        assert_eq!(d_lens(15, 1, 0).unwrap(), r(7, 2));
        assert_eq!(d_lens(5, 3, 3).unwrap(), r(-2, 5));
        assert_eq!(d_lens(3, 5, 2).unwrap(), r(-1, 2));
        assert_eq!(d_lens(1, 1, 0).unwrap(), r(0, 1));
        assert_eq!(d_lens(2, 1, 1).unwrap(), r(-1, 4));
    }

    #[test]
    fn labels_and_parameters_are_normalized() {
        assert_eq!(d_lens(5, 3, 6).unwrap(), d_lens(5, 3, 1).unwrap());
        assert_eq!(d_lens(5, 3, -4).unwrap(), d_lens(5, 3, 1).unwrap());
        assert_eq!(d_lens(3, 5, 4).unwrap(), d_lens(3, 2, 1).unwrap());
        assert_eq!(d_lens(1, 7, 3).unwrap(), Rational::zero());
    }

    #[test]
    fn closed_form_accepts_label_p() {
        for p in 1..20 {
            assert_eq!(closed_form_q1(p, p), closed_form_q1(p, 0));
        }
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(d_lens(4, 2, 0), Err(Error::NotCoprime { p: 4, q: 2 }));
        assert!(matches!(d_lens(0, 1, 0), Err(Error::Domain(_))));
        assert!(matches!(d_lens(3, 0, 0), Err(Error::Domain(_))));
        assert!(d_lens_recursion_step(3, 5, 0).is_err());
        assert!(d_lens_recursion_step(5, 3, 8).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let c = |p, q, i| {
            conj_label(p, q, SpincIndex::new(i, p).unwrap())
                .unwrap()
                .value()
        };
        assert_eq!(c(5, 3, 0), 2);
        assert_eq!(c(5, 3, 1), 1);
        assert_eq!(c(1, 1, 0), 0);
        assert_eq!(d_lens(5, 3, 0).unwrap(), d_lens(5, 3, 2).unwrap());
        assert_eq!(
            conj_label(5, 3, SpincIndex::new(0, 4).unwrap()),
            Err(Error::ModulusMismatch {
                expected: 5,
                found: 4
            })
        );
    }

    #[test]
    fn spinc_index_arithmetic() {
        let i = SpincIndex::new(-1, 5).unwrap();
        assert_eq!(i.value(), 4);
        assert_eq!((i + 3).value(), 2);
        assert_eq!((i + -9).value(), 0);
        assert!(SpincIndex::new(0, 0).is_err());
    }

    #[test]
    fn canonical_view() {
        assert_eq!(
            LensSpace::new(3, 5).unwrap().canonical(),
            LensSpace::new(3, 2).unwrap()
        );
        assert_eq!(LensSpace::new(1, 9).unwrap().canonical().q(), 1);
    }

    #[test]
    fn large_parameters_stay_exact() {
        let d = d_lens(1_000_003, 999_999, 123_456).unwrap();
        let again = d_lens(1_000_003, 999_999 + 1_000_003, 123_456 + 1_000_003).unwrap();
        assert_eq!(d, again);
    }
}
