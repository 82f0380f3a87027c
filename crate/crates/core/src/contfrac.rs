//! Negative continued fractions
//! `[r_0, …, r_n] = r_0 - 1/(r_1 - 1/(⋯ - 1/r_n))`.
//!
//! Lens spaces always expand `-p/q` (never `p/q`); the coefficients then
//! satisfy `r_i ≤ -2`. Solid tori allow a final coefficient `r_n = -1`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ext_rat::ExtRat;
use crate::lens::LensSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CfForm {
    /// Every coefficient `≤ -2`.
    Lens,
    /// `r_i ≤ -2` for `i < n` and `r_n ≤ -1`.
    Solid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegCf {
    coeffs: Vec<BigInt>,
}

impl NegCf {
    /// Wraps coefficients after checking the bounds of `form`.
    pub fn new(coeffs: Vec<BigInt>, form: CfForm) -> Result<Self> {
        let Some((last, init)) = coeffs.split_last() else {
            return Err(Error::Domain("empty continued fraction".into()));
        };
        let minus_two = BigInt::from(-2);
        let last_bound = match form {
            CfForm::Lens => minus_two.clone(),
            CfForm::Solid => BigInt::from(-1),
        };
        if init.iter().any(|r| r > &minus_two) || last > &last_bound {
            return Err(Error::Domain(format!("coefficients out of range for {form:?} form")));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64], form: CfForm) -> Result<Self> {
        Self::new(coeffs.iter().map(|&r| BigInt::from(r)).collect(), form)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_lens_form(&self) -> bool {
        self.coeffs.iter().all(|r| r <= &BigInt::from(-2))
    }

    /// Exact value of the expansion.
    pub fn evaluate(&self) -> ExtRat {
        evaluate(&self.coeffs)
    }

    pub fn reversed(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    /// Coefficients as machine integers, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|r| i64::try_from(r).ok()).collect()
    }
}

impl fmt::Display for NegCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Evaluates `r_0 - 1/(r_1 - ⋯)` projectively, so any integer list is accepted.
pub fn evaluate(coeffs: &[BigInt]) -> ExtRat {
    let mut it = coeffs.iter().rev();
    let Some(last) = it.next() else {
        return ExtRat::infinity();
    };
    let (mut a, mut b) = (last.clone(), BigInt::one());
    for r in it {
        let next = r * &a - &b;
        b = a;
        a = next;
    }
    ExtRat::new(a, b).expect("consecutive convergents are coprime")
}

/// Greedy negative continued fraction of `x`.
///
/// Lens form needs `x < -1`; solid form needs `x ≤ -1`.
pub fn neg_cf(x: &ExtRat, form: CfForm) -> Result<NegCf> {
    if x.is_infinite() {
        return Err(Error::Domain("cannot expand ∞".into()));
    }
    let minus_one = ExtRat::integer(-1);
    let ok = match form {
        CfForm::Lens => x < &minus_one,
        CfForm::Solid => x <= &minus_one,
    };
    if !ok {
        return Err(Error::Domain(format!("{x} outside the range of the {form:?} expansion")));
    }
    let (mut n, mut d) = (x.num().clone(), x.den().clone());
    let mut coeffs = Vec::new();
    loop {
        let r = n.div_floor(&d);
        if d.is_one() {
            coeffs.push(r);
            break;
        }
        // x = r - 1/x'  with  x' = d / (r d - n) < -1
        let rest = &n - &r * &d;
        n = -d;
        d = rest;
        coeffs.push(r);
    }
    NegCf::new(coeffs, form)
}

/// The entries of `∏ [[-r_i, 1], [-1, 0]] = [[p, p'], [-q, -q']]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixIdentity {
    pub p: BigInt,
    pub p_prime: BigInt,
    pub q: BigInt,
    pub q_prime: BigInt,
}

impl MatrixIdentity {
    pub fn determinant_condition(&self) -> BigInt {
        &self.p * &self.q_prime - &self.p_prime * &self.q
    }
}

/// Multiplies out the continued-fraction matrices of a lens-form expansion.
///
/// The product always has `pq' - p'q = -1`, and the reversed coefficient list
/// expands `-p/p'`.
pub fn cf_matrix_identity(cf: &NegCf) -> Result<MatrixIdentity> {
    if !cf.is_lens_form() {
        return Err(Error::Domain(format!("{cf} is not in lens form")));
    }
    let (mut m00, mut m01, mut m10, mut m11) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    for r in cf.coeffs() {
        // [[m00, m01], [m10, m11]] · [[-r, 1], [-1, 0]]
        let n00 = -(&m00 * r) - &m01;
        let n10 = -(&m10 * r) - &m11;
        m01 = m00;
        m11 = m10;
        m00 = n00;
        m10 = n10;
    }
    let id = MatrixIdentity { p: m00, p_prime: m01, q: -m10, q_prime: -m11 };
    debug_assert_eq!(id.determinant_condition(), BigInt::from(-1));
    debug_assert_eq!(evaluate(&cf.reversed()), ExtRat::new(-id.p.clone(), id.p_prime.clone()).unwrap());
    Ok(id)
}

/// The largest extended rational `p'/q'` with `pq' - p'q = -1`.
///
/// `1/0` is the answer exactly when `q = 1`.
pub fn dual_fraction(lens: LensSpace) -> ExtRat {
    let p = BigInt::from(lens.p());
    let q = BigInt::from(lens.q());
    if q.is_one() {
        return ExtRat::infinity();
    }
    // smallest positive q' with p q' ≡ -1 (mod q)
    let eg = p.extended_gcd(&q);
    debug_assert!(eg.gcd.is_one());
    let q_prime = (-eg.x).mod_floor(&q);
    let p_prime = (&p * &q_prime + 1) / &q;
    ExtRat::new(p_prime, q_prime).expect("q' > 0")
}

/// Numerator `p'` of [`dual_fraction`], with `p' = 1` when `q = 1`.
pub fn dual_numerator(lens: LensSpace) -> BigInt {
    dual_fraction(lens).num().clone()
}

/// Expansion used to count tight structures on a solid torus with boundary
/// slope `s`: shift `s` by the integer `k` into `[-1, 0)` and expand the
/// reciprocal `q/(p + kq)` in solid form.
pub fn solid_torus_cf(slope: &ExtRat) -> Result<NegCf> {
    let Some(s) = slope.to_rational() else {
        return Err(Error::Domain("solid torus slope must be finite".into()));
    };
    let k = -s.floor().to_integer() - BigInt::one();
    let shifted = s + num_rational::BigRational::from_integer(k);
    debug_assert!(!shifted.is_positive() && !shifted.is_zero());
    let recip = ExtRat::from_rational(&shifted.recip());
    neg_cf(&recip, CfForm::Solid)
}
