//! Exact Schubert calculus on Grassmannians and the numerical geometry of
//! their point blow-ups.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`] indexes Schubert classes by partitions in a box.
//! * [`chow`] multiplies classes with Pieri and Giambelli.
//! * [`multiplicity`] evaluates Rosenthal–Zelevinsky multiplicities.
//! * [`blowup`] pairs cycles on the blow-up at `r` points.
//! * [`cones`] decides cone membership exactly and implements the constructive
//!   decompositions of effective classes.
//! * [`orbits`] enumerates Borel orbits on `G(k, 2k)` via incidence matrices.
//! * [`delpezzo`] checks the nefness and extremality conditions for the
//!   curve classes `D_delta` on `P^2` blown up at ten points.
//! * [`cli`] is the JSON front end used by the `schubert` binary.
//!
//! Every computation is exact: big integers for intersection numbers, big
//! rationals for linear programming, and quadratic surds for the del Pezzo
//! classes.

pub mod error;
pub mod linalg;
pub mod partitions;
pub mod chow;
pub mod multiplicity;
pub mod blowup;
pub mod cones;
pub mod orbits;
pub mod delpezzo;
pub mod cli;

pub use error::{Error, Result};
