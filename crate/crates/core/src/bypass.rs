//! Bypass attachments on a convex torus with two dividing curves.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ext_rat::ExtRat;
use crate::farey::{farthest_neighbor, farthest_neighbor_ccw, in_arc};

/// Dividing set of a convex torus: `num_dividing` parallel curves of one slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusState {
    pub dividing_slope: ExtRat,
    pub num_dividing: u64,
}

impl TorusState {
    pub fn new(dividing_slope: ExtRat, num_dividing: u64) -> Result<Self> {
        if num_dividing < 2 || !num_dividing.is_multiple_of(2) {
            return Err(Error::Parity(num_dividing));
        }
        Ok(Self { dividing_slope, num_dividing })
    }

    pub fn two_curves(dividing_slope: ExtRat) -> Self {
        Self { dividing_slope, num_dividing: 2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Front,
    Back,
}

/// New dividing slope after attaching a bypass along a ruling curve of
/// slope `ruling`.
///
/// From the front the slope moves to the farthest neighbour clockwise of the
/// old slope and counterclockwise of `ruling`; from the back, the mirror. A
/// ruling slope adjacent to the dividing slope is reached in one step.
pub fn attach_bypass(state: &TorusState, ruling: &ExtRat, side: Side) -> Result<TorusState> {
    if state.num_dividing != 2 {
        return Err(Error::UnsupportedState(state.num_dividing));
    }
    let s = &state.dividing_slope;
    if s == ruling {
        return Err(Error::DegenerateArc(s.to_string()));
    }
    let next = match side {
        Side::Front => farthest_neighbor(s, ruling)?,
        Side::Back => farthest_neighbor_ccw(s, ruling)?,
    };
    Ok(TorusState::two_curves(next))
}

/// `tb` of a Legendrian boundary meeting the dividing set `intersections` times.
pub fn tb_from_dividing(intersections: u64) -> Result<BigRational> {
    if intersections < 2 || !intersections.is_multiple_of(2) {
        return Err(Error::Parity(intersections));
    }
    Ok(BigRational::new(-BigInt::from(intersections), BigInt::from(2)))
}

/// Successive front bypasses with ruling slope `to`, starting from dividing
/// slope `from`: the basic-slice decomposition of the layer between them.
pub fn basic_slice_walk(from: &ExtRat, to: &ExtRat) -> Result<Vec<TorusState>> {
    let mut state = TorusState::two_curves(from.clone());
    let mut out = vec![state.clone()];
    while &state.dividing_slope != to {
        let next = attach_bypass(&state, to, Side::Front)?;
        debug_assert!(&next.dividing_slope == to || in_arc(&next.dividing_slope, &state.dividing_slope, to)?);
        state = next;
        out.push(state.clone());
    }
    Ok(out)
}
