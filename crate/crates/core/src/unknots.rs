//! Legendrian and transverse rational unknots: `tb_Q`, `rot_Q`, `sl_Q`,
//! peak representatives and mountain ranges.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::contfrac::dual_numerator;
use crate::error::{Error, Result};
use crate::ext_rat::ExtRat;
use crate::lens::{Knot, LensSpace, OrientedKnot, Sign};
use crate::mcg::canonical_unknot;
use crate::tight::{DecoratedPath, ShuffleClass};

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Maximal `tb_Q`: `-(p-q)/p` for `K1`, `-(p-p')/p` for `K2`.
pub fn tb_q_peak(lens: LensSpace, knot: Knot) -> BigRational {
    let p = BigInt::from(lens.p());
    let other = match knot {
        Knot::K1 => BigInt::from(lens.q()),
        Knot::K2 => dual_numerator(lens),
    };
    -rat(&p - other, p)
}

fn negative_rep(s: &ExtRat) -> Result<(&BigInt, &BigInt)> {
    if s.num().is_negative() && s.den().is_positive() {
        Ok((s.num(), s.den()))
    } else {
        Err(Error::Convention(format!("vertex {s} is not of the form -a/b with a, b > 0")))
    }
}

/// `rot_Q` of the peak `L1` or `L2` from the Farey path sums.
///
/// `r₁ = Σ ε ((s ⊖ s') ⊙ -p/q)` and `r₂ = Σ ε ((s' ⊖ s) ⊙ 0/1)` over the
/// decorated edges `s → s'`, where `⊖` subtracts numerators and denominators
/// of the unreduced representatives; the result is `r/p`.
pub fn rot_q_farey(ts: &DecoratedPath, knot: Knot) -> Result<BigRational> {
    let lens = ts.lens();
    let (p, q) = (BigInt::from(lens.p()), BigInt::from(lens.q()));
    let mut r = BigInt::zero();
    for (s, t, eps) in ts.decorated_edges() {
        let (a, b) = negative_rep(s)?;
        let (c, d) = negative_rep(t)?;
        let term = match knot {
            // (a-c)/(b-d) ⊙ (-p)/q
            Knot::K1 => (a - c) * &q + (b - d) * &p,
            // (c-a)/(d-b) ⊙ 0/1
            Knot::K2 => c - a,
        };
        match eps {
            Sign::Plus => r += term,
            Sign::Minus => r -= term,
        }
    }
    Ok(BigRational::new(r, p))
}

/// [`rot_q_farey`] on the normal-form representative of a class.
pub fn rot_q_class(ts: &ShuffleClass, knot: Knot) -> BigRational {
    rot_q_farey(&ts.representative(), knot).expect("geodesic vertices lie in (-p/q, 0)")
}

/// `sl_Q = tb_Q - rot_Q`.
pub fn sl_q(tb_q: &BigRational, rot_q: &BigRational) -> BigRational {
    tb_q - rot_q
}

/// A Legendrian rational unknot, identified by its invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendrianClass {
    pub knot: OrientedKnot,
    pub tb_q: BigRational,
    pub rot_q: BigRational,
    pub structure: ShuffleClass,
}

impl LegendrianClass {
    /// The peak representative `±L1` or `±L2` in `structure`.
    pub fn peak(structure: &ShuffleClass, knot: OrientedKnot) -> Self {
        let rot = rot_q_class(structure, knot.knot);
        Self {
            knot,
            tb_q: tb_q_peak(structure.lens(), knot.knot),
            rot_q: if knot.reversed { -rot } else { rot },
            structure: structure.clone(),
        }
    }

    pub fn stabilize(&self, sign: Sign) -> Self {
        let one = BigRational::from_integer(1.into());
        let rot_q = match sign {
            Sign::Plus => &self.rot_q + &one,
            Sign::Minus => &self.rot_q - &one,
        };
        Self { tb_q: &self.tb_q - one, rot_q, ..self.clone() }
    }

    /// `sl_Q` of the positive transverse push-off.
    pub fn sl_q(&self) -> BigRational {
        sl_q(&self.tb_q, &self.rot_q)
    }
}

/// Peaks `L1`; `±L1`; or `±L1, ±L2`, by the class count of oriented unknots.
pub fn legendrian_classification(ts: &ShuffleClass) -> Vec<LegendrianClass> {
    let lens = ts.lens();
    let knots: &[OrientedKnot] = if lens.p() == 2 {
        &[OrientedKnot::K1]
    } else if lens.q_is_one() || lens.q_is_minus_one() {
        &[OrientedKnot::K1, OrientedKnot::MINUS_K1]
    } else {
        &[OrientedKnot::K1, OrientedKnot::MINUS_K1, OrientedKnot::K2, OrientedKnot::MINUS_K2]
    };
    knots.iter().map(|&k| LegendrianClass::peak(ts, k)).collect()
}

/// A transverse rational unknot at maximal `sl_Q`: the push-off of a
/// Legendrian peak.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversePeak {
    pub knot: OrientedKnot,
    pub sl_q: BigRational,
}

pub fn transverse_classification(ts: &ShuffleClass) -> Vec<TransversePeak> {
    legendrian_classification(ts).into_iter().map(|l| TransversePeak { knot: l.knot, sl_q: l.sl_q() }).collect()
}

/// `sl_Q` after `n` transverse stabilizations.
pub fn sl_q_stabilized(peak: &BigRational, n: u32) -> BigRational {
    peak - BigRational::from_integer(BigInt::from(2 * n))
}

pub const DEFAULT_DEPTH: u32 = 4;

/// Realized `(rot_Q, tb_Q)` pairs down to `depth` stabilizations below the peaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MountainRange {
    pub knot: OrientedKnot,
    /// The member of the smooth isotopy class list this knot is isotopic to,
    /// when that differs from `knot`.
    pub isotopic_to: Option<OrientedKnot>,
    pub depth: u32,
    pub peaks: Vec<(BigRational, BigRational)>,
    /// Sorted by `tb_Q` descending, then `rot_Q` ascending.
    pub dots: Vec<(BigRational, BigRational)>,
}

impl MountainRange {
    /// Dots grouped by row, top row first.
    pub fn rows(&self) -> Vec<(BigRational, Vec<BigRational>)> {
        let mut out: Vec<(BigRational, Vec<BigRational>)> = Vec::new();
        for (r, t) in &self.dots {
            match out.last_mut() {
                Some((tb, row)) if tb == t => row.push(r.clone()),
                _ => out.push((t.clone(), vec![r.clone()])),
            }
        }
        out
    }
}

pub fn mountain_range(ts: &ShuffleClass, knot: OrientedKnot, depth: u32) -> MountainRange {
    let peak = LegendrianClass::peak(ts, knot);
    let canonical = canonical_unknot(ts.lens(), knot);
    let peaks = vec![(peak.rot_q.clone(), peak.tb_q.clone())];
    let mut dots = BTreeSet::new();
    for (r, t) in &peaks {
        for k in 0..=depth {
            let tb = t - BigRational::from_integer(k.into());
            for plus in 0..=k {
                let shift = i64::from(plus) - i64::from(k - plus);
                dots.insert((std::cmp::Reverse(tb.clone()), r + BigRational::from_integer(shift.into())));
            }
        }
    }
    MountainRange {
        knot,
        isotopic_to: (canonical != knot).then_some(canonical),
        depth,
        peaks,
        dots: dots.into_iter().map(|(std::cmp::Reverse(t), r)| (r, t)).collect(),
    }
}
