//! Shared domain types: the lens space `L(p,q)`, the two rational unknots,
//! and basic-slice signs.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ext_rat::ExtRat;

/// A lens space `L(p,q)` with `p > q > 0` coprime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if !(p > q && q > 0) {
            return Err(Error::Domain(format!("L({p},{q}) needs p > q > 0")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::Domain(format!("L({p},{q}) needs gcd(p,q) = 1")));
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The surgery slope `-p/q`.
    pub fn slope(&self) -> ExtRat {
        ExtRat::neg_ratio(self.p, self.q).expect("p > 0")
    }

    /// `q ≡ -1 (mod p)`.
    pub fn q_is_minus_one(&self) -> bool {
        (self.q + 1).is_multiple_of(self.p)
    }

    /// `q ≡ 1 (mod p)`; with `0 < q < p` this is `q = 1`.
    pub fn q_is_one(&self) -> bool {
        self.q % self.p == 1 % self.p
    }

    /// `q² ≡ 1 (mod p)`.
    pub fn q_squared_is_one(&self) -> bool {
        let (p, q) = (self.p as u128, self.q as u128);
        (q * q) % p == 1 % p
    }

    /// All `L(p,q)` with `2 ≤ p ≤ p_max`, ordered by `p` then `q`.
    pub fn all_up_to(p_max: u64) -> Vec<LensSpace> {
        (2..=p_max).flat_map(|p| (1..p).filter_map(move |q| LensSpace::new(p, q).ok())).collect()
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// The two cores `K1`, `K2` of the Heegaard torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Knot {
    K1,
    K2,
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Knot::K1 => "K1",
            Knot::K2 => "K2",
        })
    }
}

/// `±K1` or `±K2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedKnot {
    pub knot: Knot,
    pub reversed: bool,
}

impl OrientedKnot {
    pub const K1: Self = Self { knot: Knot::K1, reversed: false };
    pub const MINUS_K1: Self = Self { knot: Knot::K1, reversed: true };
    pub const K2: Self = Self { knot: Knot::K2, reversed: false };
    pub const MINUS_K2: Self = Self { knot: Knot::K2, reversed: true };

    pub fn reverse(self) -> Self {
        Self { reversed: !self.reversed, ..self }
    }
}

impl fmt::Display for OrientedKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reversed {
            write!(f, "-{}", self.knot)
        } else {
            write!(f, "{}", self.knot)
        }
    }
}

impl FromStr for OrientedKnot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "k1" | "+k1" => Ok(Self::K1),
            "-k1" => Ok(Self::MINUS_K1),
            "k2" | "+k2" => Ok(Self::K2),
            "-k2" => Ok(Self::MINUS_K2),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

/// Sign of a basic slice, or of a stabilization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            _ => Err(Error::Parse(c.to_string())),
        }
    }
}

/// Parses a sign string such as `"++-"`.
pub fn parse_signs(s: &str) -> Result<Vec<Sign>> {
    s.chars().map(Sign::from_char).collect()
}

pub fn signs_to_string(signs: &[Sign]) -> String {
    signs.iter().map(|s| s.as_char()).collect()
}
