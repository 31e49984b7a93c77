mod common;

use nefcalc::bounds;
use nefcalc::lp::{LinearProgram, Outcome, Relation};
use nefcalc::mixedvol;
use nefcalc::nefseq;
use nefcalc::radii;
use nefcalc::rational::{int, ratio};
use nefcalc::{Polytope, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn polytope(d: usize, max_points: usize) -> impl Strategy<Value = Polytope> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, d), d + 1..=max_points).prop_filter_map(
        "full-dimensional",
        move |pts| {
            let pts: Vec<Vec<Rational>> = pts.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
            Polytope::hull(&pts, d).ok().filter(Polytope::is_full_dimensional)
        },
    )
}

fn planar_or_spatial() -> impl Strategy<Value = (Polytope, Polytope)> {
    prop_oneof![(polytope(2, 7), polytope(2, 7)), (polytope(3, 6), polytope(3, 6))]
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn translation(d: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d)), d)
}

/// Containment LP over every facet normal of both bodies.
fn slope_over_both_fans(p: &Polytope, q: &Polytope) -> Rational {
    let d = p.dim();
    let mut rays: Vec<Vec<BigInt>> = p.normal_directions().unwrap();
    rays.extend(q.normal_directions().unwrap());
    rays.sort();
    rays.dedup();
    let mut objective = vec![Rational::zero(); d + 1];
    objective[0] = Rational::one();
    let mut lp = LinearProgram::new(objective);
    lp.free = (0..=d).map(|j| j > 0).collect();
    for u in &rays {
        let mut row = vec![q.support_int(u)];
        row.extend(u.iter().map(|c| Rational::from_integer(c.clone())));
        lp.constrain(row, Relation::Le, p.support_int(u));
    }
    lp.constrain(
        (0..=d).map(|j| if j == 0 { Rational::one() } else { Rational::zero() }).collect(),
        Relation::Ge,
        Rational::zero(),
    );
    match lp.solve() {
        Outcome::Optimal(s) => s.value,
        other => panic!("unexpected LP outcome {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn hull_round_trip(p in prop_oneof![polytope(2, 8), polytope(3, 8)]) {
        let again = Polytope::hull(p.vertices(), p.dim()).unwrap();
        prop_assert!(p.contains(&again) && again.contains(&p));
        prop_assert_eq!(&again, &p);
        prop_assert!(p.check_representation());
    }

    #[test]
    fn planar_hull_matches_monotone_chain(p in polytope(2, 9)) {
        let mut chain = common::hull2(&common::to_p2(p.vertices()));
        chain.sort();
        prop_assert_eq!(chain, common::to_p2(p.vertices()));
        prop_assert_eq!(mixedvol::volume(&p), common::area(&common::to_p2(p.vertices())));
    }

    #[test]
    fn minkowski_sum_commutes_and_associates(p in polytope(2, 6), q in polytope(2, 6), r in polytope(2, 6)) {
        prop_assert_eq!(p.minkowski_sum(&q).unwrap(), q.minkowski_sum(&p).unwrap());
        let left = p.minkowski_sum(&q).unwrap().minkowski_sum(&r).unwrap();
        let right = p.minkowski_sum(&q.minkowski_sum(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn support_is_additive((p, q) in planar_or_spatial(), u in prop::collection::vec(-5i64..=5, 3)) {
        let u: Vec<Rational> = u[..p.dim()].iter().map(|&x| int(x)).collect();
        let sum = p.minkowski_sum(&q).unwrap();
        prop_assert_eq!(sum.support(&u), p.support(&u) + q.support(&u));
    }

    #[test]
    fn diagonal_mixed_volume_is_volume(p in prop_oneof![polytope(2, 7), polytope(3, 6)]) {
        let args = vec![p.clone(); p.dim()];
        prop_assert_eq!(mixedvol::mixed_volume(&args).unwrap(), mixedvol::volume(&p));
    }

    #[test]
    fn mixed_volume_is_symmetric(a in polytope(3, 5), b in polytope(3, 5), c in polytope(3, 5)) {
        let v = mixedvol::mixed_volume(&[a.clone(), b.clone(), c.clone()]).unwrap();
        prop_assert_eq!(&v, &mixedvol::mixed_volume(&[b.clone(), c.clone(), a.clone()]).unwrap());
        prop_assert_eq!(&v, &mixedvol::mixed_volume(&[c, a, b]).unwrap());
    }

    #[test]
    fn mixed_volume_is_multilinear(p in polytope(2, 6), p2 in polytope(2, 6), q in polytope(2, 6), l in positive_rational()) {
        let sum = p.minkowski_sum(&p2).unwrap();
        let lhs = mixedvol::mixed_volume(&[sum, q.clone()]).unwrap();
        let rhs = mixedvol::mixed_volume(&[p.clone(), q.clone()]).unwrap() + mixedvol::mixed_volume(&[p2, q.clone()]).unwrap();
        prop_assert_eq!(lhs, rhs);
        let scaled = mixedvol::mixed_volume(&[p.scale(&l).unwrap(), q.clone()]).unwrap();
        prop_assert_eq!(scaled, l * mixedvol::mixed_volume(&[p, q]).unwrap());
    }

    #[test]
    fn mixed_volume_is_monotone(p in polytope(2, 6), extra in prop::collection::vec(prop::collection::vec(-6i64..=6, 2), 1..4), q in polytope(2, 6)) {
        let mut pts = p.vertices().to_vec();
        pts.extend(extra.iter().map(|v| v.iter().map(|&x| int(x)).collect::<Vec<_>>()));
        let bigger = Polytope::hull(&pts, 2).unwrap();
        prop_assert!(bigger.contains(&p));
        prop_assert!(mixedvol::mixed_volume(&[p, q.clone()]).unwrap() <= mixedvol::mixed_volume(&[bigger, q]).unwrap());
    }

    #[test]
    fn mixed_volume_ignores_translation((p, q) in planar_or_spatial(), x in translation(3)) {
        let x = &x[..p.dim()];
        let mut args = vec![p.clone(); p.dim() - 1];
        args.push(q.clone());
        let v = mixedvol::mixed_volume(&args).unwrap();
        args[0] = p.translate(x);
        prop_assert_eq!(&v, &mixedvol::mixed_volume(&args).unwrap());
        let last = args.len() - 1;
        args[last] = q.translate(x);
        prop_assert_eq!(v, mixedvol::mixed_volume(&args).unwrap());
    }

    #[test]
    fn both_sequence_algorithms_agree((p, q) in planar_or_spatial()) {
        let a = mixedvol::sequence_by_polarization(&p, &q).unwrap();
        let b = mixedvol::sequence_by_interpolation(&p, &q).unwrap();
        prop_assert_eq!(a.values(), b.values());
    }

    #[test]
    fn realized_sequences_satisfy_khovanskii_teissier((p, q) in planar_or_spatial()) {
        let s = mixedvol::intersection_sequence(&p, &q).unwrap();
        prop_assert!(s.is_realized());
        prop_assert!(nefseq::check_log_concavity(&s).unwrap().passed());
        prop_assert!(nefseq::check_kt_power(&s).passed());
        let c = nefseq::check_equality_conditions(&s).unwrap();
        prop_assert!(c.all_equivalent());
    }

    #[test]
    fn slope_is_homogeneous((p, q) in planar_or_spatial(), l in positive_rational()) {
        let s = radii::slope(&p, &q).unwrap();
        prop_assert_eq!(radii::slope(&p.scale(&l).unwrap(), &q).unwrap(), &l * &s);
        prop_assert_eq!(radii::slope(&p, &q.scale(&l).unwrap()).unwrap(), s / l);
    }

    #[test]
    fn lp_certificates_verify((p, q) in planar_or_spatial()) {
        let r = radii::inradius(&p, &q).unwrap();
        prop_assert!(r.verify(&p, &q));
        prop_assert!(!r.active_facets.is_empty());
    }

    #[test]
    fn facet_lp_matches_union_of_fans((p, q) in planar_or_spatial()) {
        prop_assert_eq!(radii::slope(&p, &q).unwrap(), slope_over_both_fans(&p, &q));
    }

    #[test]
    fn slope_product_at_most_one((p, q) in planar_or_spatial(), l in positive_rational(), x in translation(3)) {
        let prod = radii::slope(&p, &q).unwrap() * radii::slope(&q, &p).unwrap();
        let homothetic = radii::homothety_witness(&p, &q).unwrap().is_some();
        prop_assert!(prod <= Rational::one());
        prop_assert_eq!(prod.is_one(), homothetic);
        let image = p.scale(&l).unwrap().translate(&x[..p.dim()]);
        prop_assert!((radii::slope(&p, &image).unwrap() * radii::slope(&image, &p).unwrap()).is_one());
    }

    #[test]
    fn radius_bounds_bracket_lp_radii((p, q) in planar_or_spatial()) {
        let s = mixedvol::intersection_sequence(&p, &q).unwrap();
        let r = radii::slope(&p, &q).unwrap();
        let big_r = radii::outradius(&p, &q).unwrap().value;
        for link in bounds::sandwich(&s, &r, &big_r, 1024, 64).unwrap() {
            prop_assert!(link.holds(), "{} fails", link.label);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn sequence_json_round_trip(v in prop::collection::vec((0i64..50, 1i64..7), 2..6)) {
        let s = mixedvol::NefSequence::free(v.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap();
        prop_assert_eq!(mixedvol::NefSequence::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn polytope_json_round_trip(p in polytope(2, 7)) {
        prop_assert_eq!(Polytope::from_json(&p.to_json()).unwrap(), p);
    }
}
