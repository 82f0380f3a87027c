//! Tight contact structures on `L(p,q)` and on solid tori.
//!
//! A tight structure on `L(p,q)` is a sign decoration of the clockwise
//! geodesic `-p/q = s_0, s_1, …, s_{n-1} = -1, s_n = 0`: every edge except
//! the first and the last carries a basic-slice sign. Two decorations are
//! isotopic exactly when they differ by reordering signs inside a shuffle
//! block, a maximal run of consecutive decorated edges whose outer endpoints
//! satisfy `|s_{i-1} ⊙ s_{i+1}| = 2`.

use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::contfrac::{neg_cf, solid_torus_cf, CfForm};
use crate::error::{Error, Result};
use crate::ext_rat::ExtRat;
use crate::farey::{geodesic, FareyPath};
use crate::lens::{signs_to_string, LensSpace, Sign};

/// The geodesic from `-p/q` clockwise to `0`.
pub fn lens_geodesic(lens: LensSpace) -> FareyPath {
    geodesic(&lens.slope(), &ExtRat::zero()).expect("-p/q ≠ 0")
}

/// A geodesic with one sign per decorated edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedPath {
    lens: LensSpace,
    path: Arc<FareyPath>,
    signs: Vec<Sign>,
}

impl DecoratedPath {
    pub fn new(lens: LensSpace, signs: Vec<Sign>) -> Result<Self> {
        Self::with_path(lens, Arc::new(lens_geodesic(lens)), signs)
    }

    fn with_path(lens: LensSpace, path: Arc<FareyPath>, signs: Vec<Sign>) -> Result<Self> {
        let expected = decorated_edge_count(&path);
        if signs.len() != expected {
            return Err(Error::Domain(format!("{lens} has {expected} decorated edges, got {} signs", signs.len())));
        }
        Ok(Self { lens, path, signs })
    }

    pub fn lens(&self) -> LensSpace {
        self.lens
    }

    pub fn path(&self) -> &FareyPath {
        &self.path
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_string(&self) -> String {
        signs_to_string(&self.signs)
    }

    /// `(s_i, s_{i+1}, ε_i)` for each decorated edge, in path order.
    pub fn decorated_edges(&self) -> impl Iterator<Item = (&ExtRat, &ExtRat, Sign)> + '_ {
        let v = self.path.vertices();
        self.signs.iter().enumerate().map(move |(j, &e)| (&v[j + 1], &v[j + 2], e))
    }

    /// The shuffle class this decoration belongs to.
    pub fn shuffle_class(&self) -> ShuffleClass {
        let blocks = shuffle_blocks(&self.path);
        let signs = normalize_signs(&self.signs, &blocks);
        ShuffleClass { lens: self.lens, path: self.path.clone(), blocks, signs }
    }
}

fn decorated_edge_count(path: &FareyPath) -> usize {
    path.vertices().len().saturating_sub(3)
}

/// Partition of the decorated edges `0..m` into shuffle blocks.
///
/// Decorated edge `j` runs from `s_{j+1}` to `s_{j+2}`; edges `j` and `j+1`
/// share a block when `|s_{j+1} ⊙ s_{j+3}| = 2`.
pub fn shuffle_blocks(path: &FareyPath) -> Vec<Range<usize>> {
    let v = path.vertices();
    let m = decorated_edge_count(path);
    let two = BigInt::from(2);
    let mut blocks: Vec<Range<usize>> = Vec::new();
    for j in 0..m {
        let joins = j > 0 && v[j].farey_mul(&v[j + 2]).abs() == two;
        match blocks.last_mut() {
            Some(b) if joins => b.end = j + 1,
            _ => blocks.push(j..j + 1),
        }
    }
    blocks
}

/// Within each block, `+` before `-`.
fn normalize_signs(signs: &[Sign], blocks: &[Range<usize>]) -> Vec<Sign> {
    let mut out = signs.to_vec();
    for b in blocks {
        out[b.clone()].sort();
    }
    out
}

/// An isotopy class of tight contact structures on `L(p,q)`, stored in
/// normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleClass {
    lens: LensSpace,
    path: Arc<FareyPath>,
    blocks: Vec<Range<usize>>,
    signs: Vec<Sign>,
}

impl ShuffleClass {
    pub fn lens(&self) -> LensSpace {
        self.lens
    }

    pub fn path(&self) -> &FareyPath {
        &self.path
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_string(&self) -> String {
        signs_to_string(&self.signs)
    }

    /// Number of `+` signs in each block; determines the class.
    pub fn plus_counts(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| self.signs[b.clone()].iter().filter(|&&s| s == Sign::Plus).count()).collect()
    }

    /// The normal-form decoration.
    pub fn representative(&self) -> DecoratedPath {
        DecoratedPath { lens: self.lens, path: self.path.clone(), signs: self.signs.clone() }
    }

    /// Universally tight iff every decorated edge has the same sign.
    pub fn is_universally_tight(&self) -> bool {
        self.signs.windows(2).all(|w| w[0] == w[1])
    }

    /// Parses a sign string for `lens` and returns its class.
    pub fn from_sign_string(lens: LensSpace, s: &str) -> Result<Self> {
        let signs = crate::lens::parse_signs(s)?;
        Ok(DecoratedPath::new(lens, signs)?.shuffle_class())
    }
}

/// One representative per isotopy class, ordered lexicographically by sign
/// string with `+` before `-` (so the all-plus class comes first).
pub fn enumerate_tight(lens: LensSpace) -> Vec<ShuffleClass> {
    let path = Arc::new(lens_geodesic(lens));
    let blocks = shuffle_blocks(&path);
    let sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();

    let mut out = Vec::new();
    let mut plus: Vec<usize> = sizes.clone();
    loop {
        let signs = plus
            .iter()
            .zip(&sizes)
            .flat_map(|(&m, &n)| std::iter::repeat_n(Sign::Plus, m).chain(std::iter::repeat_n(Sign::Minus, n - m)))
            .collect();
        out.push(ShuffleClass { lens, path: path.clone(), blocks: blocks.clone(), signs });
        // odometer, last block fastest, counting each block down from its size
        let mut i = plus.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if plus[i] > 0 {
                plus[i] -= 1;
                plus[i + 1..].copy_from_slice(&sizes[i + 1..]);
                break;
            }
        }
    }
}

/// `|(r_0 + 1) ⋯ (r_n + 1)|` for `-p/q = [r_0, …, r_n]`.
pub fn count_tight_lens(lens: LensSpace) -> BigInt {
    let cf = neg_cf(&lens.slope(), CfForm::Lens).expect("-p/q < -1");
    cf.coeffs().iter().map(|r| (r + 1i32).abs()).product()
}

/// `|(r_0 + 1) ⋯ (r_{n-1} + 1) r_n|` for a solid torus with boundary slope
/// `slope` (meridian `∞`).
pub fn count_tight_solid(slope: &ExtRat) -> Result<BigInt> {
    let cf = solid_torus_cf(slope)?;
    let (last, init) = cf.coeffs().split_last().expect("non-empty");
    let head: BigInt = init.iter().map(|r| (r + 1i32).abs()).product();
    Ok(head * last.abs())
}

/// Number of isotopy classes among `ξ⁺_std`, `ξ⁻_std`: one when `q ≡ -1`.
pub fn standard_structure_count(lens: LensSpace) -> usize {
    if lens.q_is_minus_one() {
        1
    } else {
        2
    }
}

/// The constant-sign classes: `ξ⁺_std` (all `+`) then, if distinct,
/// `ξ⁻_std` (all `-`).
pub fn standard_structures(lens: LensSpace) -> Vec<ShuffleClass> {
    let all = enumerate_tight(lens);
    let n = all.len();
    let mut out = vec![all[0].clone()];
    if n > 1 {
        out.push(all[n - 1].clone());
    }
    debug_assert!(out.iter().all(ShuffleClass::is_universally_tight));
    debug_assert_eq!(out.len(), standard_structure_count(lens));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn l(p: u64, q: u64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    fn strings(lens: LensSpace) -> Vec<String> {
        enumerate_tight(lens).iter().map(ShuffleClass::sign_string).collect()
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(strings(l(2, 1)), vec![""]);
        assert_eq!(strings(l(3, 1)), vec!["+", "-"]);
        assert_eq!(strings(l(9, 2)), vec!["+++", "++-", "+--", "---"]);
        // two singleton blocks
        assert_eq!(strings(l(8, 3)), vec!["++", "+-", "-+", "--"]);
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_tight_lens(l(4, 1)), BigInt::from(3));
        assert_eq!(count_tight_lens(l(7, 3)), BigInt::from(2));
        for p in 2..40 {
            assert_eq!(count_tight_lens(l(p, p - 1)), BigInt::one());
        }
    }

    #[test]
    fn solid_examples() {
        let r = |n: i64, d: i64| ExtRat::new(n, d).unwrap();
        assert_eq!(count_tight_solid(&r(-1, 1)).unwrap(), BigInt::from(1));
        assert_eq!(count_tight_solid(&r(-3, 2)).unwrap(), BigInt::from(2));
        assert_eq!(count_tight_solid(&r(-2, 1)).unwrap(), BigInt::from(1));
        // -7/5 → -5/2 = [-3, -2]: |-2| · |-2|
        assert_eq!(count_tight_solid(&r(-7, 5)).unwrap(), BigInt::from(4));
        assert!(count_tight_solid(&ExtRat::infinity()).is_err());
    }

    #[test]
    fn universally_tight_examples() {
        let c31 = ShuffleClass::from_sign_string(l(3, 1), "+").unwrap();
        assert!(c31.is_universally_tight());
        let c92 = ShuffleClass::from_sign_string(l(9, 2), "++-").unwrap();
        assert!(!c92.is_universally_tight());
        assert!(enumerate_tight(l(2, 1))[0].is_universally_tight());
    }

    #[test]
    fn standard_structure_examples() {
        assert_eq!(standard_structure_count(l(2, 1)), 1);
        assert_eq!(standard_structure_count(l(5, 2)), 2);
        assert_eq!(standard_structure_count(l(7, 6)), 1);
        let std52: Vec<_> = standard_structures(l(5, 2)).iter().map(ShuffleClass::sign_string).collect();
        assert_eq!(std52, vec!["+", "-"]);
    }

    #[test]
    fn shuffling_inside_a_block_is_the_same_class() {
        let a = ShuffleClass::from_sign_string(l(9, 2), "-+-").unwrap();
        let b = ShuffleClass::from_sign_string(l(9, 2), "+--").unwrap();
        assert_eq!(a, b);
        let c = ShuffleClass::from_sign_string(l(8, 3), "-+").unwrap();
        let d = ShuffleClass::from_sign_string(l(8, 3), "+-").unwrap();
        assert_ne!(c, d);
    }

    #[test]
    fn wrong_sign_count_is_rejected() {
        assert!(DecoratedPath::new(l(9, 2), vec![Sign::Plus]).is_err());
        assert!(ShuffleClass::from_sign_string(l(9, 2), "++x").is_err());
    }

    #[test]
    fn counts_agree_with_enumeration() {
        for lens in LensSpace::all_up_to(30) {
            let classes = enumerate_tight(lens);
            assert_eq!(BigInt::from(classes.len()), count_tight_lens(lens), "{lens}");
            let ut = classes.iter().filter(|c| c.is_universally_tight()).count();
            assert_eq!(ut, standard_structure_count(lens), "{lens}");
            // normal forms are distinct
            let mut s: Vec<_> = classes.iter().map(ShuffleClass::sign_string).collect();
            s.dedup();
            assert_eq!(s.len(), classes.len());
        }
    }

    #[test]
    fn block_sizes_match_continued_fraction() {
        for lens in LensSpace::all_up_to(100) {
            let path = lens_geodesic(lens);
            let blocks = shuffle_blocks(&path);
            // blocks tile 0..m contiguously
            let m = decorated_edge_count(&path);
            let mut next = 0;
            for b in &blocks {
                assert_eq!(b.start, next);
                assert!(!b.is_empty());
                next = b.end;
            }
            assert_eq!(next, m);
            let product: BigInt = blocks.iter().map(|b| BigInt::from(b.len() + 1)).product();
            assert_eq!(product, count_tight_lens(lens), "{lens}");
            // nonzero |r_i + 2| read backwards along the coefficients
            let cf = neg_cf(&lens.slope(), CfForm::Lens).unwrap().to_i64s().unwrap();
            let sizes: Vec<usize> =
                cf.iter().rev().map(|r| (r + 2).unsigned_abs() as usize).filter(|&s| s > 0).collect();
            let got: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
            assert_eq!(got, sizes, "{lens}");
        }
    }
}
