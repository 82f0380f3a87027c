//! Smooth and contact mapping class groups of lens spaces and `S¹×S²`, and
//! the smooth isotopy classes of oriented rational unknots.

use std::fmt;

use crate::lens::{Knot, LensSpace, OrientedKnot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Trivial,
    Z2,
    Z2xZ2,
    ZxZ2,
}

impl GroupTag {
    /// Group order; `None` when infinite.
    pub fn order(self) -> Option<u64> {
        match self {
            GroupTag::Trivial => Some(1),
            GroupTag::Z2 => Some(2),
            GroupTag::Z2xZ2 => Some(4),
            GroupTag::ZxZ2 => None,
        }
    }

    fn generator_count(self) -> usize {
        match self {
            GroupTag::Trivial => 0,
            GroupTag::Z2 => 1,
            GroupTag::Z2xZ2 | GroupTag::ZxZ2 => 2,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupTag::Trivial => "1",
            GroupTag::Z2 => "Z2",
            GroupTag::Z2xZ2 => "Z2xZ2",
            GroupTag::ZxZ2 => "ZxZ2",
        })
    }
}

/// `σ` swaps the coordinates, `τ` conjugates both; `δ`, `η` act on `S¹×S²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Sigma,
    Tau,
    SigmaTau,
    Delta,
    Eta,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Sigma => "sigma",
            Generator::Tau => "tau",
            Generator::SigmaTau => "sigma*tau",
            Generator::Delta => "delta",
            Generator::Eta => "eta",
        })
    }
}

/// A group named by its isomorphism type and generators.
///
/// When `aliases` is non-empty the group is cyclic and each listed element
/// generates the same subgroup as `generators[0]` (e.g. `⟨σ⟩ = ⟨τ⟩`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDescription {
    pub tag: GroupTag,
    pub generators: Vec<Generator>,
    pub aliases: Vec<Generator>,
}

impl GroupDescription {
    pub fn trivial() -> Self {
        Self { tag: GroupTag::Trivial, generators: vec![], aliases: vec![] }
    }

    pub fn z2(g: Generator) -> Self {
        Self { tag: GroupTag::Z2, generators: vec![g], aliases: vec![] }
    }

    pub fn z2_alias(g: Generator, alias: Generator) -> Self {
        Self { tag: GroupTag::Z2, generators: vec![g], aliases: vec![alias] }
    }

    pub fn z2xz2(a: Generator, b: Generator) -> Self {
        Self { tag: GroupTag::Z2xZ2, generators: vec![a, b], aliases: vec![] }
    }

    pub fn order(&self) -> Option<u64> {
        self.tag.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.tag == GroupTag::Trivial
    }

    pub fn is_consistent(&self) -> bool {
        self.generators.len() == self.tag.generator_count() && (self.aliases.is_empty() || self.tag == GroupTag::Z2)
    }

    /// True when `g` is a listed generator or alias.
    pub fn names(&self, g: Generator) -> bool {
        self.generators.contains(&g) || self.aliases.contains(&g)
    }
}

impl fmt::Display for GroupDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Generator::to_string).collect();
        let mut inner = gens.join(", ");
        for a in &self.aliases {
            inner.push('=');
            inner.push_str(&a.to_string());
        }
        write!(f, "{} [{}]", self.tag, inner)
    }
}

/// `π₀ Diff₊(L(p,q))`.
pub fn smooth_mcg(lens: LensSpace) -> GroupDescription {
    use Generator::*;
    if lens.p() == 2 {
        GroupDescription::trivial()
    } else if lens.q_is_minus_one() {
        GroupDescription::z2_alias(Sigma, Tau)
    } else if lens.q_is_one() {
        GroupDescription::z2(Tau)
    } else if lens.q_squared_is_one() {
        GroupDescription::z2xz2(Sigma, Tau)
    } else {
        GroupDescription::z2(Tau)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactMcg {
    pub group: GroupDescription,
    /// `π₀ Cont₀` is trivial: every contact generator is smoothly nontrivial.
    pub cont0_trivial: bool,
}

/// `π₀ Cont(L(p,q), ξ_std)`; the same for `ξ⁺_std` and `ξ⁻_std`.
pub fn contact_mcg(lens: LensSpace) -> ContactMcg {
    let sigma = (lens.p() != 2 && lens.q_is_minus_one())
        || (!lens.q_is_one() && !lens.q_is_minus_one() && lens.q_squared_is_one());
    let group = if sigma { GroupDescription::z2(Generator::Sigma) } else { GroupDescription::trivial() };
    let smooth = smooth_mcg(lens);
    let cont0_trivial = group.generators.iter().all(|&g| smooth.names(g));
    ContactMcg { group, cont0_trivial }
}

/// Smooth mapping class group relative to a Heegaard torus.
pub fn contact_mcg_rel_torus(lens: LensSpace) -> GroupDescription {
    if lens.q_squared_is_one() {
        GroupDescription::z2xz2(Generator::Sigma, Generator::Tau)
    } else {
        GroupDescription::z2(Generator::Tau)
    }
}

/// Kernel of the surjection from the relative group onto `π₀ Diff₊`.
pub fn inclusion_kernel(lens: LensSpace) -> GroupDescription {
    use Generator::*;
    if lens.p() == 2 {
        GroupDescription::z2xz2(Sigma, Tau)
    } else if lens.q_is_minus_one() {
        GroupDescription::z2(SigmaTau)
    } else if lens.q_is_one() {
        GroupDescription::z2(Sigma)
    } else {
        GroupDescription::trivial()
    }
}

/// Whether `π₀ Cont → π₀ Diff₊` is an isomorphism.
pub fn inclusion_is_iso(lens: LensSpace) -> bool {
    lens.q_is_minus_one()
}

/// Oriented rational unknots up to smooth isotopy.
pub fn unknot_classes(lens: LensSpace) -> Vec<OrientedKnot> {
    use OrientedKnot as K;
    if lens.p() == 2 {
        vec![K::K1]
    } else if lens.q_is_one() || lens.q_is_minus_one() {
        vec![K::K1, K::MINUS_K1]
    } else {
        vec![K::K1, K::MINUS_K1, K::K2, K::MINUS_K2]
    }
}

/// The member of [`unknot_classes`] smoothly isotopic to `k`.
pub fn canonical_unknot(lens: LensSpace, k: OrientedKnot) -> OrientedKnot {
    if lens.p() == 2 {
        return OrientedKnot::K1;
    }
    match k.knot {
        Knot::K1 => k,
        Knot::K2 if lens.q_is_one() => OrientedKnot { knot: Knot::K1, reversed: k.reversed },
        Knot::K2 if lens.q_is_minus_one() => OrientedKnot { knot: Knot::K1, reversed: !k.reversed },
        Knot::K2 => k,
    }
}

/// `π₀ Cont(S¹×S², ξ_std) = Z ⊕ Z2`.
pub fn contact_mcg_s1s2() -> GroupDescription {
    GroupDescription { tag: GroupTag::ZxZ2, generators: vec![Generator::Delta, Generator::Eta], aliases: vec![] }
}

/// Rotation number of `δ(±L)` for a Legendrian core `±L` with rotation `rot`.
pub fn delta_rot(rot: i64, reversed: bool) -> i64 {
    if reversed {
        rot - 1
    } else {
        rot + 1
    }
}

/// Rotation number of `η(±L)`.
pub fn eta_rot(rot: i64) -> i64 {
    -rot
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn lens(p: u64, q: u64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn smooth_examples() {
        assert!(smooth_mcg(lens(2, 1)).is_trivial());
        assert_eq!(smooth_mcg(lens(7, 6)), GroupDescription::z2_alias(Sigma, Tau));
        assert_eq!(smooth_mcg(lens(8, 3)), GroupDescription::z2xz2(Sigma, Tau));
        assert_eq!(smooth_mcg(lens(3, 1)), GroupDescription::z2(Tau));
        assert_eq!(smooth_mcg(lens(7, 2)), GroupDescription::z2(Tau));
        assert_eq!(smooth_mcg(lens(7, 6)).to_string(), "Z2 [sigma=tau]");
    }

    #[test]
    fn contact_examples() {
        assert!(contact_mcg(lens(2, 1)).group.is_trivial());
        assert_eq!(contact_mcg(lens(5, 4)).group, GroupDescription::z2(Sigma));
        assert_eq!(contact_mcg(lens(8, 3)).group.to_string(), "Z2 [sigma]");
        assert!(contact_mcg(lens(3, 1)).group.is_trivial());
        assert!(contact_mcg(lens(7, 2)).group.is_trivial());
    }

    #[test]
    fn relative_and_kernel_examples() {
        assert_eq!(contact_mcg_rel_torus(lens(2, 1)).tag, GroupTag::Z2xZ2);
        assert_eq!(contact_mcg_rel_torus(lens(5, 2)), GroupDescription::z2(Tau));
        assert_eq!(contact_mcg_rel_torus(lens(8, 3)).tag, GroupTag::Z2xZ2);
        assert_eq!(inclusion_kernel(lens(2, 1)).tag, GroupTag::Z2xZ2);
        assert_eq!(inclusion_kernel(lens(3, 1)), GroupDescription::z2(Sigma));
        assert_eq!(inclusion_kernel(lens(4, 3)), GroupDescription::z2(SigmaTau));
        assert!(inclusion_kernel(lens(5, 2)).is_trivial());
        assert!(inclusion_is_iso(lens(2, 1)));
        assert!(inclusion_is_iso(lens(7, 6)));
        assert!(!inclusion_is_iso(lens(8, 3)));
    }

    #[test]
    fn unknot_examples() {
        assert_eq!(unknot_classes(lens(2, 1)).len(), 1);
        assert_eq!(unknot_classes(lens(4, 3)).len(), 2);
        assert_eq!(unknot_classes(lens(5, 2)).len(), 4);
        assert_eq!(canonical_unknot(lens(4, 3), OrientedKnot::K2), OrientedKnot::MINUS_K1);
        assert_eq!(canonical_unknot(lens(4, 1), OrientedKnot::MINUS_K2), OrientedKnot::MINUS_K1);
        assert_eq!(canonical_unknot(lens(2, 1), OrientedKnot::MINUS_K2), OrientedKnot::K1);
    }

    #[test]
    fn s1s2() {
        let g = contact_mcg_s1s2();
        assert_eq!((g.tag, g.order()), (GroupTag::ZxZ2, None));
        assert_eq!(g.to_string(), "ZxZ2 [delta, eta]");
        assert_eq!(delta_rot(3, false), 4);
        assert_eq!(delta_rot(3, true), 2);
        assert_eq!(eta_rot(3), -3);
    }

    /// Relations among the tables that hold by construction in the theory:
    /// the relative group surjects with the given kernel, the contact group
    /// injects, and `σ` only exists when `q² ≡ 1`.
    #[test]
    fn table_relations() {
        for l in LensSpace::all_up_to(200) {
            let smooth = smooth_mcg(l);
            let contact = contact_mcg(l);
            let rel = contact_mcg_rel_torus(l);
            let ker = inclusion_kernel(l);
            for g in [&smooth, &contact.group, &rel, &ker] {
                assert!(g.is_consistent(), "{l} {g}");
            }
            let (s, c) = (smooth.order().unwrap(), contact.group.order().unwrap());
            assert_eq!(rel.order().unwrap(), s * ker.order().unwrap(), "{l}");
            assert_eq!(s % c, 0, "{l}");
            assert_eq!(inclusion_is_iso(l), s == c, "{l}");
            assert!(contact.cont0_trivial, "{l}");
            if !contact.group.is_trivial() {
                assert!(l.q_squared_is_one(), "{l}");
            }
            let classes = unknot_classes(l);
            for k in [OrientedKnot::K1, OrientedKnot::MINUS_K1, OrientedKnot::K2, OrientedKnot::MINUS_K2] {
                assert!(classes.contains(&canonical_unknot(l, k)), "{l} {k}");
            }
        }
    }
}
