mod common;

use inframonogenic::ball::{inner_product, norm2};
use inframonogenic::basis::{enumerate_basis, BasisId};
use inframonogenic::fourier::{project, reconstruct, Expansion};
use inframonogenic::identities::{check_identities, Status};
use inframonogenic::ops::{apply_left, apply_right, classify, sandwich};
use inframonogenic::poly::json::{from_json, to_json};
use inframonogenic::poly::{Axis, Monomial, QPolynomial, ScalarPoly};
use inframonogenic::{rat, QPoly, Rational};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn term(max_degree: u32) -> impl Strategy<Value = (Monomial, Rational)> {
    (0..=max_degree, 0..=max_degree, 0..=max_degree, rational())
        .prop_filter("degree bound", move |(a, b, c, _)| a + b + c <= max_degree)
        .prop_map(|(a, b, c, r)| (Monomial::new(a, b, c), r))
}

fn scalar_poly(max_degree: u32) -> impl Strategy<Value = ScalarPoly<Rational>> {
    prop::collection::vec(term(max_degree), 0..4).prop_map(ScalarPoly::from_terms)
}

fn qpoly(max_degree: u32) -> impl Strategy<Value = QPoly> {
    [scalar_poly(max_degree), scalar_poly(max_degree), scalar_poly(max_degree), scalar_poly(max_degree)]
        .prop_map(QPoly::from_components)
}

fn reduced(max_degree: u32) -> impl Strategy<Value = QPoly> {
    [scalar_poly(max_degree), scalar_poly(max_degree), scalar_poly(max_degree)]
        .prop_map(|[a, b, c]| QPoly::from_components([a, b, c, ScalarPoly::zero()]))
}

fn point() -> impl Strategy<Value = [Rational; 3]> {
    [rational(), rational(), rational()]
}

fn basis_ids(max_degree: u32) -> Vec<BasisId> {
    (0..=max_degree).flat_map(enumerate_basis).collect()
}

fn expansion(max_degree: u32) -> impl Strategy<Value = Expansion> {
    let ids = basis_ids(max_degree);
    prop::collection::vec((prop::sample::select(ids), rational()), 0..5).prop_map(move |pairs| {
        let mut e = Expansion::new(max_degree);
        for (id, c) in pairs {
            let v = e.get(id) + c;
            e.set(id, v).unwrap();
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_associative(f in qpoly(2), g in qpoly(2), h in qpoly(2)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn product_distributes(f in qpoly(3), g in qpoly(3), h in qpoly(3)) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&g + &h) * &f, &(&g * &f) + &(&h * &f));
    }

    #[test]
    fn conjugation_reverses_products(f in qpoly(3), g in qpoly(3)) {
        prop_assert_eq!((&f * &g).conj(), &g.conj() * &f.conj());
        prop_assert_eq!(f.conj().conj(), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in qpoly(3), g in qpoly(3), p in point()) {
        prop_assert_eq!((&f * &g).eval(&p), &f.eval(&p) * &g.eval(&p));
        prop_assert_eq!((&f + &g).eval(&p), &f.eval(&p) + &g.eval(&p));
    }

    #[test]
    fn partials_commute(f in qpoly(4)) {
        for a in Axis::ALL {
            for b in Axis::ALL {
                prop_assert_eq!(f.partial(a).partial(b), f.partial(b).partial(a));
            }
        }
    }

    #[test]
    fn operators_factor_the_laplacian(f in qpoly(4)) {
        let lap = f.laplacian();
        prop_assert_eq!(apply_left(true, &apply_left(false, &f)), lap.clone());
        prop_assert_eq!(apply_left(false, &apply_left(true, &f)), lap.clone());
        prop_assert_eq!(apply_right(true, &apply_right(false, &f)), lap);
    }

    #[test]
    fn sandwich_is_linear(f in qpoly(3), g in qpoly(3), c in rational()) {
        let lhs = sandwich(false, &(&f + &g.scale(&c)));
        prop_assert_eq!(lhs, &sandwich(false, &f) + &sandwich(false, &g).scale(&c));
    }

    #[test]
    fn sandwiches_preserve_reduced_polynomials(f in reduced(4)) {
        prop_assert!(sandwich(false, &f).is_reduced());
        prop_assert!(sandwich(true, &f).is_reduced());
    }

    #[test]
    fn classification_is_consistent(f in qpoly(3)) {
        prop_assert!(classify(&f).is_consistent());
    }

    #[test]
    fn json_round_trip(f in qpoly(4)) {
        let text = to_json(&f);
        prop_assert_eq!(from_json(&text).unwrap(), f);
    }

    #[test]
    fn inner_product_is_symmetric_and_positive(f in qpoly(3), g in qpoly(3)) {
        prop_assert_eq!(inner_product(&f, &g), inner_product(&g, &f));
        prop_assert_eq!(norm2(&f).is_zero(), f.is_zero());
        prop_assert!(f.is_zero() || norm2(&f).is_positive());
    }

    #[test]
    fn identities_hold_on_reduced_pairs(f in reduced(3), g in reduced(3)) {
        for c in check_identities(&f, &g) {
            prop_assert_ne!(c.status, Status::Fail, "{}", c.identity);
        }
    }

    #[test]
    fn identities_hold_on_full_quaternion_inputs(f in qpoly(3), g in qpoly(3)) {
        for c in check_identities(&f, &g) {
            prop_assert_ne!(c.status, Status::Fail, "{}", c.identity);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn projection_inverts_reconstruction(e in expansion(3)) {
        prop_assert_eq!(project(&reconstruct(&e).unwrap(), 3).unwrap(), e);
    }

    #[test]
    fn projection_is_linear(f in reduced(3), g in reduced(3), c in rational()) {
        let lhs = project(&(&f + &g.scale(&c)), 3).unwrap();
        let rhs = project(&f, 3).unwrap().add_scaled(&c, &project(&g, 3).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn projection_is_idempotent(f in reduced(3)) {
        let once = reconstruct(&project(&f, 3).unwrap()).unwrap();
        let twice = reconstruct(&project(&once, 3).unwrap()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn expansion_json_round_trip(e in expansion(4)) {
        let text = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<Expansion>(&text).unwrap(), e);
    }
}

#[test]
fn evaluation_works_in_floating_point() {
    let f = QPoly::var(Axis::X1).unit_mul_left(1);
    let g: QPolynomial<f64> = f.map_coeffs(<f64 as inframonogenic::Scalar>::from_rational);
    let v = (&g * &g).eval(&[0.0, 0.5, 0.0]);
    assert_eq!(v.0, [-0.25, 0.0, 0.0, 0.0]);
}

#[test]
fn random_monogenic_samples_are_monogenic() {
    let mut rng = common::rng(7);
    for _ in 0..20 {
        let f = common::random_monogenic(&mut rng, 3);
        let flags = classify(&f);
        assert!(flags.monogenic && flags.inframonogenic && flags.reduced);
    }
}
