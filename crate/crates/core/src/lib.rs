//! Exact computations for contact structures on lens spaces `L(p,q)`.
//!
//! Every quantity here is an exact integer or rational. Slopes are
//! extended rationals ([`ExtRat`]) with `∞ = 1/0`, and all counting, path and
//! invariant computations run on arbitrary-precision integers.
//!
//! The modules, bottom-up:
//!
//! - [`ext_rat`]: extended rationals with Farey sum and Farey multiplication.
//! - [`contfrac`]: negative continued fractions, their matrix identity, and
//!   the dual fraction `p'/q'`.
//! - [`farey`]: clockwise arcs, farthest neighbours, geodesics and a BFS
//!   oracle on the Farey graph.
//! - [`bypass`]: bypass attachments on convex tori with two dividing curves.
//! - [`tight`]: tight contact structures on `L(p,q)` as shuffle classes of
//!   sign-decorated geodesics.
//! - [`surgery`]: chain surgery presentations of the rational unknots and the
//!   linking-matrix rotation formula.
//! - [`unknots`]: `tb_Q`, `rot_Q`, `sl_Q`, stabilization and mountain ranges.
//! - [`mcg`]: smooth and contact mapping class group tables.
//! - [`sweep`]: the cross-validation harness tying the modules together.

pub mod bypass;
pub mod contfrac;
pub mod error;
pub mod ext_rat;
pub mod farey;
pub mod lens;
pub mod linalg;
pub mod mcg;
pub mod surgery;
pub mod sweep;
pub mod tight;
pub mod unknots;

pub use contfrac::{CfForm, NegCf};
pub use error::{Error, Result};
pub use ext_rat::ExtRat;
pub use farey::FareyPath;
pub use lens::{Knot, LensSpace, OrientedKnot, Sign};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
