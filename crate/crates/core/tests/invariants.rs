use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use lens_contact::contfrac::{dual_fraction, neg_cf};
use lens_contact::farey::geodesic;
use lens_contact::mcg::{canonical_unknot, inclusion_kernel, unknot_classes};
use lens_contact::surgery::{build_chain, class_rotation_vector, rot_q_for_class, rot_spectrum};
use lens_contact::tight::{count_tight_lens, enumerate_tight, lens_geodesic, shuffle_blocks};
use lens_contact::unknots::{legendrian_classification, mountain_range, rot_q_class, tb_q_peak};
use lens_contact::{CfForm, ExtRat, Knot, LensSpace, OrientedKnot};

fn lens_up_to(p_max: u64) -> impl Strategy<Value = LensSpace> {
    (2..=p_max).prop_flat_map(|p| (Just(p), 1..p)).prop_filter_map("coprime", |(p, q)| LensSpace::new(p, q).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn block_sizes_give_the_count(l in lens_up_to(400)) {
        let path = lens_geodesic(l);
        let product: BigInt = shuffle_blocks(&path).iter().map(|b| BigInt::from(b.len() + 1)).product();
        prop_assert_eq!(product, count_tight_lens(l));
    }

    #[test]
    fn geodesic_is_reversible(l in lens_up_to(400)) {
        let fwd = lens_geodesic(l);
        // counterclockwise from 0 back to -p/q is the mirror of the clockwise
        // path from 0 to p/q
        let back = geodesic(&ExtRat::zero(), &l.slope().negate()).unwrap();
        let mirrored: Vec<ExtRat> = back.vertices().iter().rev().map(ExtRat::negate).collect();
        prop_assert_eq!(fwd.vertices(), &mirrored[..]);
    }

    #[test]
    fn surgery_and_path_sums_agree_per_class(l in lens_up_to(60), pick in any::<prop::sample::Index>()) {
        let classes = enumerate_tight(l);
        let c = &classes[pick.index(classes.len())];
        for knot in [Knot::K1, Knot::K2] {
            prop_assert_eq!(rot_q_class(c, knot), rot_q_for_class(c, knot));
        }
        let chain = build_chain(l, Knot::K1);
        let rot = class_rotation_vector(c);
        prop_assert!(chain.clone().with_rotations(rot).is_ok());
    }

    #[test]
    fn spectrum_is_symmetric(l in lens_up_to(40)) {
        for knot in [Knot::K1, Knot::K2] {
            let s = rot_spectrum(l, knot);
            let mut neg: Vec<BigRational> = s.iter().map(|x| -x.clone()).collect();
            neg.sort();
            prop_assert_eq!(neg, s);
        }
    }

    #[test]
    fn k2_mirrors_k1_of_the_dual(l in lens_up_to(300)) {
        // -p/p' = [r_n, …, r_0]
        let k1 = neg_cf(&l.slope(), CfForm::Lens).unwrap();
        let dual = dual_fraction(l);
        let pp = if l.q() == 1 { BigInt::from(1) } else { dual.num().clone() };
        prop_assert_eq!(tb_q_peak(l, Knot::K2), -BigRational::new(BigInt::from(l.p()) - &pp, l.p().into()));
        if pp > BigInt::from(1) {
            let rev = neg_cf(&ExtRat::new(-BigInt::from(l.p()), pp).unwrap(), CfForm::Lens).unwrap();
            prop_assert_eq!(rev.coeffs(), &k1.reversed()[..]);
        }
    }

    #[test]
    fn peaks_follow_unknot_classes(l in lens_up_to(80)) {
        let classes = unknot_classes(l);
        let ts = &enumerate_tight(l)[0];
        let peaks: Vec<OrientedKnot> = legendrian_classification(ts).into_iter().map(|c| c.knot).collect();
        prop_assert_eq!(&peaks, &classes);
        // the kernel of the relative group identifies the four oriented cores
        let ker = inclusion_kernel(l).order().unwrap() as usize;
        prop_assert_eq!(classes.len() * ker, 4);
    }

    #[test]
    fn identified_knots_share_tb(l in lens_up_to(120)) {
        for k in [OrientedKnot::K2, OrientedKnot::MINUS_K2] {
            let c = canonical_unknot(l, k);
            prop_assert_eq!(tb_q_peak(l, k.knot), tb_q_peak(l, c.knot));
        }
    }

    #[test]
    fn mountain_rows_widen_by_one(l in lens_up_to(30), depth in 0u32..6) {
        let ts = &enumerate_tight(l)[0];
        let mr = mountain_range(ts, OrientedKnot::K1, depth);
        let rows = mr.rows();
        prop_assert_eq!(rows.len(), depth as usize + 1);
        for (k, (_, rots)) in rows.iter().enumerate() {
            prop_assert_eq!(rots.len(), k + 1);
        }
    }
}
