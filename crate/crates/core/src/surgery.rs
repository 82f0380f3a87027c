//! Contact (-1)-surgery chains for the rational unknots and `rot_Q` through
//! the linking matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::contfrac::{neg_cf, CfForm};
use crate::error::{Error, Result};
use crate::lens::{Knot, LensSpace, Sign};
use crate::linalg::IntMatrix;
use crate::tight::ShuffleClass;

/// Which chain component the surgery meridian links.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeridianOf {
    First,
    Last,
}

/// A linear chain of unknots `L_0, …, L_n` with framings `r_i ≤ -2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryChain {
    pub framings: Vec<i64>,
    pub rotations: Option<Vec<i64>>,
    pub meridian_of: MeridianOf,
}

impl SurgeryChain {
    pub fn len(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.framings.is_empty()
    }

    /// Tridiagonal: `r_i` on the diagonal, `1` beside it.
    pub fn linking_matrix(&self) -> IntMatrix {
        let n = self.framings.len();
        let mut m = IntMatrix::zeros(n);
        for (i, &r) in self.framings.iter().enumerate() {
            m.set(i, i, r.into());
            if i + 1 < n {
                m.set(i, i + 1, 1.into());
                m.set(i + 1, i, 1.into());
            }
        }
        m
    }

    /// Admissible rotation numbers of component `i`, ascending:
    /// `r_i + 2, r_i + 4, …, -(r_i + 2)`.
    pub fn component_rotations(&self, i: usize) -> Vec<i64> {
        let top = -(self.framings[i] + 2);
        (-top..=top).step_by(2).collect()
    }

    /// Every stabilization choice, first component varying slowest.
    pub fn rot_choices(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::with_capacity(self.len())];
        for i in 0..self.len() {
            let opts = self.component_rotations(i);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    opts.iter().map(move |&r| {
                        let mut v = prefix.clone();
                        v.push(r);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn with_rotations(mut self, rot: Vec<i64>) -> Result<Self> {
        if rot.len() != self.len() {
            return Err(Error::Domain(format!("expected {} rotation numbers, got {}", self.len(), rot.len())));
        }
        for (i, &r) in rot.iter().enumerate() {
            let top = -(self.framings[i] + 2);
            if r.abs() > top || (r - top) % 2 != 0 {
                return Err(Error::Domain(format!("rotation {r} not admissible for framing {}", self.framings[i])));
            }
        }
        self.rotations = Some(rot);
        Ok(self)
    }

    /// Unit vector on the component the meridian links.
    pub fn lk(&self) -> Vec<i64> {
        let mut lk = vec![0; self.len()];
        match self.meridian_of {
            MeridianOf::First => lk[0] = 1,
            MeridianOf::Last => lk[self.len() - 1] = 1,
        }
        lk
    }

    /// Linking data for the given rotation vector (or the stored one).
    pub fn linking_data(&self, rot: Option<&[i64]>) -> Result<LinkingData> {
        let rot = match (rot, &self.rotations) {
            (Some(r), _) => r.to_vec(),
            (None, Some(r)) => r.clone(),
            (None, None) => return Err(Error::Domain("rotation numbers unset".into())),
        };
        Ok(LinkingData { matrix: self.linking_matrix(), rot, lk: self.lk(), rot0: 0 })
    }
}

/// Chain for `K1` (meridian of the first component) or `K2` (meridian of the
/// last), with framings `-p/q = [r_0, …, r_n]`.
pub fn build_chain(lens: LensSpace, knot: Knot) -> SurgeryChain {
    let cf = neg_cf(&lens.slope(), CfForm::Lens).expect("-p/q < -1");
    let framings = cf.coeffs().iter().map(|r| r.to_i64().expect("framing fits in i64 since |r_i| ≤ p")).collect();
    let meridian_of = match knot {
        Knot::K1 => MeridianOf::First,
        Knot::K2 => MeridianOf::Last,
    };
    SurgeryChain { framings, rotations: None, meridian_of }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingData {
    pub matrix: IntMatrix,
    pub rot: Vec<i64>,
    pub lk: Vec<i64>,
    pub rot0: i64,
}

impl LinkingData {
    /// `|det M|`, the order of the first homology.
    pub fn order(&self) -> BigInt {
        let d = self.matrix.determinant();
        if d < BigInt::zero() {
            -d
        } else {
            d
        }
    }
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn dot(a: &[i64], x: &[BigRational]) -> BigRational {
    a.iter().zip(x).map(|(&ai, xi)| BigRational::from_integer(ai.into()) * xi).sum()
}

/// `rot_0 - rot^T M^{-1} lk`, by an exact solve of `M x = lk`.
pub fn rot_q_surgery(data: &LinkingData) -> Result<BigRational> {
    let x = data.matrix.solve(&to_big(&data.lk))?;
    Ok(BigRational::from_integer(data.rot0.into()) - dot(&data.rot, &x))
}

/// `rot_Q` of the meridian over every stabilization choice, sorted.
pub fn rot_spectrum(lens: LensSpace, knot: Knot) -> Vec<BigRational> {
    let chain = build_chain(lens, knot);
    let x = chain.linking_matrix().solve(&to_big(&chain.lk())).expect("det M = ±p");
    let mut out: Vec<BigRational> = chain.rot_choices().iter().map(|rot| -dot(rot, &x)).collect();
    out.sort();
    out
}

/// The rotation vector whose surgery diagram presents `class`.
///
/// Components with `r_i = -2` carry rotation `0`; the others, read from the
/// last, correspond to the shuffle blocks in path order, and each takes
/// `#minus - #plus` over its block.
pub fn class_rotation_vector(class: &ShuffleClass) -> Vec<i64> {
    let chain = build_chain(class.lens(), Knot::K1);
    let mut rot = vec![0i64; chain.len()];
    let active = (0..chain.len()).rev().filter(|&i| chain.framings[i] != -2);
    for (i, block) in active.zip(class.blocks()) {
        rot[i] = class.signs()[block.clone()]
            .iter()
            .map(|&s| match s {
                Sign::Plus => -1,
                Sign::Minus => 1,
            })
            .sum();
    }
    rot
}

/// `rot_Q` of `K1` or `K2` in the structure `class`, from its surgery
/// diagram. For `K2` the meridian is oriented against the chain.
pub fn rot_q_for_class(class: &ShuffleClass, knot: Knot) -> BigRational {
    let chain = build_chain(class.lens(), knot);
    let mut data = chain.linking_data(Some(&class_rotation_vector(class))).expect("lengths agree");
    if knot == Knot::K2 {
        data.lk.iter_mut().for_each(|x| *x = -*x);
    }
    rot_q_surgery(&data).expect("det M = ±p")
}
