//! Cross-validation sweep over every `L(p,q)` with `p ≤ p_max`.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::ext_rat::ExtRat;
use crate::farey::oracle::bfs_with_count;
use crate::lens::{Knot, LensSpace};
use crate::mcg::{contact_mcg, contact_mcg_rel_torus, inclusion_is_iso, inclusion_kernel, smooth_mcg, unknot_classes};
use crate::surgery::{build_chain, rot_q_for_class, rot_spectrum};
use crate::tight::{count_tight_lens, enumerate_tight, lens_geodesic, standard_structure_count, ShuffleClass};
use crate::unknots::{legendrian_classification, rot_q_class, sl_q, tb_q_peak};

pub type RotFn = fn(&ShuffleClass, Knot) -> BigRational;

pub const FAMILIES: [&str; 6] =
    ["tight-count", "geodesic-bfs", "rot-dual", "det", "mcg-consistency", "universal-tight"];

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub p_max: u64,
    /// The Farey-side `rot_Q`; replaceable to check that the sweep notices.
    pub rot_q: RotFn,
}

impl SweepConfig {
    pub fn new(p_max: u64) -> Self {
        Self { p_max, rot_q: rot_q_class }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub lens: LensSpace,
    pub class_index: Option<usize>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class_index {
            Some(i) => write!(f, "{} class {}: {}", self.lens, i, self.detail),
            None => write!(f, "{}: {}", self.lens, self.detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    /// Smallest `p`, then `q`, then class index.
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub p_max: u64,
    pub checks: Vec<CheckResult>,
    pub runtime: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

type Failure = (Option<usize>, String);

fn fail(class: Option<usize>, detail: impl Into<String>) -> Result<(), Failure> {
    Err((class, detail.into()))
}

fn check_tight_count(lens: LensSpace) -> Result<(), Failure> {
    let n = enumerate_tight(lens).len();
    let formula = count_tight_lens(lens);
    if BigInt::from(n) != formula {
        return fail(None, format!("enumerated {n}, formula {formula}"));
    }
    Ok(())
}

fn check_geodesic(lens: LensSpace) -> Result<(), Failure> {
    let g = lens_geodesic(lens);
    if !g.is_valid() {
        return fail(None, "geodesic is not a Farey path");
    }
    let (bfs, _) =
        bfs_with_count(&lens.slope(), &ExtRat::zero(), lens.p()).map_err(|e| (None, format!("oracle: {e}")))?;
    if g != bfs {
        return fail(None, format!("geodesic {:?} vs oracle {:?}", g.to_strings(), bfs.to_strings()));
    }
    Ok(())
}

fn sorted(mut v: Vec<BigRational>) -> Vec<BigRational> {
    v.sort();
    v
}

fn check_rot_dual(lens: LensSpace, rot_q: RotFn) -> Result<(), Failure> {
    let classes = enumerate_tight(lens);
    let p = BigInt::from(lens.p());
    for knot in [Knot::K1, Knot::K2] {
        let farey: Vec<BigRational> = classes.iter().map(|c| rot_q(c, knot)).collect();
        for (i, (c, r)) in classes.iter().zip(&farey).enumerate() {
            let surgery = rot_q_for_class(c, knot);
            if r != &surgery {
                return fail(Some(i), format!("{knot} {}: path sum {r}, surgery {surgery}", c.sign_string()));
            }
            if !p.is_multiple_of(r.denom()) {
                return fail(Some(i), format!("{knot}: p rot_Q not an integer ({r})"));
            }
            if (r * BigRational::from_integer(p.clone())).abs() >= BigRational::from_integer(p.clone()) {
                return fail(Some(i), format!("{knot}: |r| ≥ p ({r})"));
            }
        }
        let spectrum = rot_spectrum(lens, knot);
        if sorted(farey.clone()) != spectrum {
            return fail(None, format!("{knot}: path-sum and surgery multisets differ"));
        }
        // maximal sl_Q is attained by a universally tight class
        let tb = tb_q_peak(lens, knot);
        let sls: Vec<BigRational> = farey.iter().map(|r| sl_q(&tb, r)).collect();
        let best = sls.iter().max().expect("at least one class");
        let at_constant = classes.iter().zip(&sls).any(|(c, s)| c.is_universally_tight() && s == best);
        if !at_constant {
            return fail(None, format!("{knot}: maximal sl_Q {best} not attained by a constant-sign class"));
        }
    }
    Ok(())
}

fn check_det(lens: LensSpace) -> Result<(), Failure> {
    for knot in [Knot::K1, Knot::K2] {
        let m = build_chain(lens, knot).linking_matrix();
        let d = m.determinant();
        if d.abs() != BigInt::from(lens.p()) || !m.is_symmetric() {
            return fail(None, format!("{knot}: det M = {d}"));
        }
    }
    Ok(())
}

fn check_mcg(lens: LensSpace) -> Result<(), Failure> {
    let smooth = smooth_mcg(lens);
    let contact = contact_mcg(lens);
    let (s, c) = (smooth.order().unwrap_or(0), contact.group.order().unwrap_or(0));
    if c == 0 || s % c != 0 {
        return fail(None, format!("|contact| = {c} does not divide |smooth| = {s}"));
    }
    if inclusion_is_iso(lens) != (s == c) {
        return fail(None, "isomorphism criterion disagrees with group orders");
    }
    let rel = contact_mcg_rel_torus(lens).order().unwrap_or(0);
    let ker = inclusion_kernel(lens).order().unwrap_or(0);
    if rel != s * ker {
        return fail(None, format!("|rel| = {rel} but |smooth| |ker| = {}", s * ker));
    }
    if !contact.group.is_trivial() && !lens.q_squared_is_one() {
        return fail(None, "nontrivial contact group without q² ≡ 1");
    }
    if !contact.cont0_trivial {
        return fail(None, "contact generator is smoothly trivial");
    }
    let classes = unknot_classes(lens);
    if ![1, 2, 4].contains(&classes.len()) {
        return fail(None, format!("{} unknot classes", classes.len()));
    }
    for (i, ts) in enumerate_tight(lens).iter().enumerate() {
        let peaks: Vec<_> = legendrian_classification(ts).into_iter().map(|l| l.knot).collect();
        if peaks != classes {
            return fail(Some(i), format!("peaks {peaks:?} vs unknot classes {classes:?}"));
        }
    }
    Ok(())
}

fn check_universal(lens: LensSpace, rot_q: RotFn) -> Result<(), Failure> {
    let classes = enumerate_tight(lens);
    let constant: Vec<&ShuffleClass> = classes.iter().filter(|c| c.is_universally_tight()).collect();
    if constant.len() != standard_structure_count(lens) {
        return fail(None, format!("{} constant-sign classes", constant.len()));
    }
    let (first, last) = (&classes[0], &classes[classes.len() - 1]);
    for knot in [Knot::K1, Knot::K2] {
        if rot_q(last, knot) != -rot_q(first, knot) {
            return fail(Some(classes.len() - 1), format!("{knot}: all-minus rot_Q is not minus all-plus"));
        }
    }
    Ok(())
}

fn run_family(idx: usize, lens: LensSpace, rot_q: RotFn) -> Result<(), Failure> {
    match idx {
        0 => check_tight_count(lens),
        1 => check_geodesic(lens),
        2 => check_rot_dual(lens, rot_q),
        3 => check_det(lens),
        4 => check_mcg(lens),
        5 => check_universal(lens, rot_q),
        _ => unreachable!(),
    }
}

pub fn check_sweep(p_max: u64) -> SweepReport {
    check_sweep_with(&SweepConfig::new(p_max))
}

pub fn check_sweep_with(config: &SweepConfig) -> SweepReport {
    let start = Instant::now();
    let lenses = LensSpace::all_up_to(config.p_max);
    let outcomes: Vec<Vec<Result<(), Failure>>> =
        lenses.par_iter().map(|&l| (0..FAMILIES.len()).map(|i| run_family(i, l, config.rot_q)).collect()).collect();
    let checks = FAMILIES
        .iter()
        .enumerate()
        .map(|(i, &name)| {
            // lenses are ordered by p then q, so the first failure is minimal
            let counterexample = lenses.iter().zip(&outcomes).find_map(|(&lens, o)| match &o[i] {
                Err((class_index, detail)) => {
                    Some(Counterexample { lens, class_index: *class_index, detail: detail.clone() })
                }
                Ok(()) => None,
            });
            CheckResult { name, passed: counterexample.is_none(), cases: lenses.len() as u64, counterexample }
        })
        .collect();
    SweepReport { p_max: config.p_max, checks, runtime: start.elapsed() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        let r = check_sweep(10);
        assert_eq!(r.checks.len(), 6);
        assert!(r.passed(), "{:?}", r.checks);
        let r = check_sweep(2);
        assert!(r.passed());
        assert!(r.checks.iter().all(|c| c.cases == 1));
    }

    #[test]
    fn sign_flip_is_caught_at_l31() {
        fn flipped(c: &ShuffleClass, k: Knot) -> BigRational {
            -rot_q_class(c, k)
        }
        let r = check_sweep_with(&SweepConfig { p_max: 10, rot_q: flipped });
        let rot = r.checks.iter().find(|c| c.name == "rot-dual").unwrap();
        assert!(!rot.passed);
        let ce = rot.counterexample.as_ref().unwrap();
        assert_eq!((ce.lens, ce.class_index), (LensSpace::new(3, 1).unwrap(), Some(0)));
    }
}
