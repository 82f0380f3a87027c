//! Extended rational slopes `p/q ∈ Q ∪ {∞}`.
//!
//! A slope is stored in lowest terms with a non-negative denominator. The
//! point at infinity is always `1/0`; `-1/0` is accepted on input and folded
//! onto it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRat {
    num: BigInt,
    den: BigInt,
}

impl ExtRat {
    /// Builds the slope `num/den` in lowest terms. Rejects `0/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::ZeroOverZero);
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(Self { num, den })
    }

    pub fn infinity() -> Self {
        Self { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self { num: n.into(), den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    /// `-p/q`, the slope every lens-space computation starts from.
    pub fn neg_ratio(p: u64, q: u64) -> Result<Self> {
        Self::new(-BigInt::from(p), BigInt::from(q))
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// The finite value, or `None` for `∞`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinite() {
            None
        } else {
            Some(BigRational::new_raw(self.num.clone(), self.den.clone()))
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        // BigRational is already reduced with a positive denominator.
        Self { num: r.numer().clone(), den: r.denom().clone() }
    }

    /// Orientation-reversing reflection `x ↦ -x` of the Farey circle.
    pub fn negate(&self) -> Self {
        if self.is_infinite() {
            self.clone()
        } else {
            Self { num: -&self.num, den: self.den.clone() }
        }
    }

    /// Farey sum (mediant) of the canonical representatives, reduced.
    ///
    /// The result is only a Farey-graph vertex adjacent to both inputs when
    /// the inputs are themselves neighbours; it is reduced either way.
    pub fn farey_sum(&self, other: &Self) -> Result<Self> {
        farey_sum_raw((&self.num, &self.den), (&other.num, &other.den))
    }

    /// Farey multiplication `a/b ⊙ c/d = ad - bc`.
    pub fn farey_mul(&self, other: &Self) -> BigInt {
        &self.num * &other.den - &self.den * &other.num
    }

    /// True when the two slopes span an edge of the Farey graph.
    pub fn is_farey_neighbor(&self, other: &Self) -> bool {
        self.farey_mul(other).abs().is_one()
    }
}

/// Mediant of two explicit representatives, which need not be canonical
/// (so `-1/0` may be used for `∞` on the negative half of the circle).
pub fn farey_sum_raw(a: (&BigInt, &BigInt), b: (&BigInt, &BigInt)) -> Result<ExtRat> {
    let num = a.0 + b.0;
    let den = a.1 + b.1;
    if num.is_zero() && den.is_zero() {
        return Err(Error::UndefinedSum);
    }
    ExtRat::new(num, den)
}

/// Linear order on `Q ∪ {∞}` with `∞` above every finite slope.
impl Ord for ExtRat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for ExtRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "inf" | "∞" | "infinity") {
            return Ok(Self::infinity());
        }
        let bad = || Error::Parse(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Self::new(n, d).map_err(|_| bad())
            }
            None => Ok(Self::integer(t.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl From<i64> for ExtRat {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

/// Renders an exact rational as `num/den`, always with an explicit denominator.
pub fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}
