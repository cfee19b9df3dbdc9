//! Spin^c bookkeeping for the reducible surgery
//! `S^3_{pq}(K_{p,q}) = S^3_{q/p}(K) # L(p,q)`.
//!
//! Labels on the left are residues mod `pq`; the projections to the two
//! summands are the affine maps
//!
//! ```text
//! phi1(i) = i - (p-1)(q-1)/2  (mod q)
//! phi2(i) = i - (p-1)(q-1)/2  (mod p)
//! ```

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::lens::{reduce, SpincIndex};

/// Cabling parameters `(p, q)`: `p` longitudes, `q` meridians, coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CableParams {
    p: u64,
    q: u64,
}

impl CableParams {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::Domain(format!(
                "cable parameters must be positive, got ({p},{q})"
            )));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        Ok(CableParams { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `(p-1)(q-1)/2`, the genus of `T_{p,q}`. An integer since one of
    /// `p`, `q` is odd.
    pub fn genus_term(&self) -> u64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    /// Order of `H_1` of the reducible surgery.
    pub fn pq(&self) -> u64 {
        self.p * self.q
    }
}

impl fmt::Display for CableParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

fn shifted(params: &CableParams, i: SpincIndex, modulus: u64) -> Result<SpincIndex> {
    i.expect_modulus(params.pq())?;
    let v = i.value() as i64 - params.genus_term() as i64;
    SpincIndex::new(reduce(v, modulus) as i64, modulus)
}

/// Projection to the `S^3_{q/p}(K)` summand (labels mod `q`).
pub fn phi1(params: &CableParams, i: SpincIndex) -> Result<SpincIndex> {
    shifted(params, i, params.q)
}

/// Projection to the `L(p,q)` summand (labels mod `p`).
pub fn phi2(params: &CableParams, i: SpincIndex) -> Result<SpincIndex> {
    shifted(params, i, params.p)
}

/// `phi1` on a plain label; `i` is read mod `pq`.
pub fn phi1_at(params: &CableParams, i: i64) -> u64 {
    let i = reduce(i, params.pq()) as i64;
    reduce(i - params.genus_term() as i64, params.q)
}

/// `phi2` on a plain label; `i` is read mod `pq`.
pub fn phi2_at(params: &CableParams, i: i64) -> u64 {
    let i = reduce(i, params.pq()) as i64;
    reduce(i - params.genus_term() as i64, params.p)
}
