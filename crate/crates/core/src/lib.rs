//! Exact Heegaard Floer correction terms of lens spaces and knot surgeries,
//! V-sequences, and the `nu+` concordance invariant of cable knots.
//!
//! ```
//! use nuplus_core::{cabling, lens, spinc::CableParams, vseq};
//!
//! assert_eq!(lens::d_lens(15, 1, 4).unwrap().to_string(), "17/30");
//! let trefoil = vseq::v_torus(2, 3).unwrap();
//! let cable = cabling::cable_v(&trefoil, &CableParams::new(2, 7).unwrap()).unwrap();
//! assert_eq!(cable.nu_plus(), cabling::NuPlus::Exact(5));
//! ```

pub mod cabling;
pub mod error;
pub mod exactnum;
pub mod expr;
pub mod lens;
pub mod spinc;
pub mod tables;
pub mod verify;
pub mod vseq;

pub use error::{Error, Result};
pub use exactnum::{rat, Rational};
