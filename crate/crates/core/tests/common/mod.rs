#![allow(dead_code)]

use inframonogenic::basis::{enumerate_basis, shared, BasisId};
use inframonogenic::fourier::Expansion;
use inframonogenic::harmonics::Parity;
use inframonogenic::poly::{Monomial, ScalarPoly};
use inframonogenic::{rat, QPoly, Rational};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn random_scalar_poly(rng: &mut impl Rng, max_degree: u32, terms: usize) -> ScalarPoly<Rational> {
    let mut p = ScalarPoly::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        let a = rng.gen_range(0..=d);
        let b = rng.gen_range(0..=d - a);
        p.add_term(Monomial::new(a, b, d - a - b), random_rational(rng));
    }
    p
}

/// A random polynomial with values in span{1, e1, e2}.
pub fn random_reduced(rng: &mut impl Rng, max_degree: u32) -> QPoly {
    let comps = [0, 1, 2].map(|_| {
        let terms = rng.gen_range(0..=4);
        random_scalar_poly(rng, max_degree, terms)
    });
    let [c0, c1, c2] = comps;
    QPoly::from_components([c0, c1, c2, ScalarPoly::zero()])
}

/// A random polynomial with all four components populated.
pub fn random_full(rng: &mut impl Rng, max_degree: u32) -> QPoly {
    let comps = [0, 1, 2, 3].map(|_| {
        let terms = rng.gen_range(0..=3);
        random_scalar_poly(rng, max_degree, terms)
    });
    QPoly::from_components(comps)
}

/// A random combination of `X` elements of degree at most `max_degree`;
/// these are monogenic.
pub fn random_monogenic(rng: &mut impl Rng, max_degree: u32) -> QPoly {
    let mut f = QPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(0..=max_degree);
        let m = rng.gen_range(0..=n + 1);
        let parity = if m == 0 || rng.gen_bool(0.5) { Parity::Plus } else { Parity::Minus };
        let x = shared().element(BasisId::x(n, m, parity).unwrap()).unwrap();
        f = &f + &x.scale(&random_rational(rng));
    }
    f
}

/// A random expansion over degrees `0..=max_degree` and the polynomial it
/// represents, summed independently of the library's reconstruction.
pub fn random_combination(rng: &mut impl Rng, max_degree: u32) -> (Expansion, QPoly) {
    let mut e = Expansion::new(max_degree);
    let mut f = QPoly::zero();
    let ids: Vec<BasisId> = (0..=max_degree).flat_map(enumerate_basis).collect();
    let count = rng.gen_range(1..=6);
    for &id in ids.choose_multiple(rng, count) {
        let c = random_rational(rng);
        if c == rat(0, 1) {
            continue;
        }
        f = &f + &shared().element(id).unwrap().scale(&c);
        e.set(id, c).unwrap();
    }
    (e, f)
}
