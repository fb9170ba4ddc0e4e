//! Seeded random generators and small oracles shared by the integration
//! tests.

#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zcancel::{normalize, Alphabet, FieldSpec, Monomial, Poly, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn alphabet(names: &[&str]) -> Arc<Alphabet> {
    Alphabet::new(names.iter().copied()).unwrap()
}

/// Nonzero scalar; over `Q` occasionally a proper fraction.
pub fn scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let n = rng.gen_range(-5i64..=5);
        let c = if field.is_rationals() && rng.gen_bool(0.2) {
            let d = rng.gen_range(2i64..=4);
            field.from_i64(n).try_div(&field.from_i64(d)).unwrap()
        } else {
            field.from_i64(n)
        };
        if !c.is_zero() {
            return c;
        }
    }
}

/// Product of `deg` random generators.
pub fn monomial<M: Monomial>(
    field: FieldSpec,
    ab: &Arc<Alphabet>,
    rng: &mut ChaCha8Rng,
    deg: usize,
) -> Poly<M> {
    let mut m = Poly::one(field, ab.clone());
    for _ in 0..deg {
        let g = rng.gen_range(0..ab.len());
        m = &m * &Poly::var(field, ab.clone(), g);
    }
    m
}

/// Up to `terms` random terms of degree at most `max_deg`.
pub fn poly<M: Monomial>(
    field: FieldSpec,
    ab: &Arc<Alphabet>,
    rng: &mut ChaCha8Rng,
    max_deg: usize,
    terms: usize,
) -> Poly<M> {
    let mut p = Poly::zero(field, ab.clone());
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let m = monomial(field, ab, rng, d);
        p = &p + &m.scale(&scalar(field, rng));
    }
    p
}

/// Random monic polynomial with zero constant term and degree in
/// `1..=max_deg`, built from at most three terms.
pub fn root_candidate<M: Monomial>(
    field: FieldSpec,
    ab: &Arc<Alphabet>,
    rng: &mut ChaCha8Rng,
    max_deg: usize,
) -> Poly<M> {
    loop {
        let top = rng.gen_range(1..=max_deg);
        let mut u = monomial(field, ab, rng, top);
        for _ in 0..rng.gen_range(0..=2) {
            let d = rng.gen_range(1..=top);
            u = &u + &monomial(field, ab, rng, d).scale(&scalar(field, rng));
        }
        if !u.is_constant() {
            return normalize(&u);
        }
    }
}

/// Coefficients of a univariate polynomial of exact degree `deg`.
pub fn univariate(field: FieldSpec, rng: &mut ChaCha8Rng, deg: usize) -> Vec<Scalar> {
    (0..=deg)
        .map(|i| {
            if i == deg || rng.gen_bool(0.7) {
                scalar(field, rng)
            } else {
                field.zero()
            }
        })
        .collect()
}

/// Horner evaluation of `h` at `u`.
pub fn horner<M: Monomial>(h: &[Scalar], u: &Poly<M>) -> Poly<M> {
    let mut acc = Poly::zero(u.field(), u.alphabet().clone());
    for c in h.iter().rev() {
        acc = &(&acc * u) + &Poly::constant(u.field(), u.alphabet().clone(), c.clone());
    }
    acc
}

/// Drops every term mentioning generator `g`.
pub fn drop_generator<M: Monomial>(p: &Poly<M>, g: usize) -> Poly<M> {
    Poly::from_terms(
        p.field(),
        p.alphabet().clone(),
        p.terms()
            .iter()
            .filter(|(m, _)| m.degree_in(g) == 0)
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Rank of a family of polynomials viewed as coefficient vectors, by
/// plain Gaussian elimination on term maps.
pub fn rank<M: Monomial>(family: &[Poly<M>]) -> usize {
    let mut basis: Vec<Poly<M>> = Vec::new();
    for p in family {
        let mut r = p.clone();
        for b in &basis {
            let (lead, lc) = b.leading_term().unwrap();
            let c = r.coefficient(lead);
            if !c.is_zero() {
                r = &r - &b.scale(&c.try_div(lc).unwrap());
            }
        }
        if !r.is_zero() {
            basis.push(r);
            basis.sort_by(|a, b| b.leading_term().unwrap().0.cmp(a.leading_term().unwrap().0));
        }
    }
    basis.len()
}

pub fn degree<M: Monomial>(p: &Poly<M>) -> usize {
    p.degree().finite().expect("nonzero polynomial")
}

/// Raw term list: letters, numerator, denominator.
pub type RawTerms = Vec<(Vec<usize>, i64, i64)>;

pub fn raw_terms(
    generators: usize,
    max_deg: usize,
    max_terms: usize,
) -> impl proptest::strategy::Strategy<Value = RawTerms> {
    use proptest::prelude::*;
    prop::collection::vec(
        (
            prop::collection::vec(0..generators, 0..=max_deg),
            -9i64..=9,
            1i64..=4,
        ),
        0..=max_terms,
    )
}

/// Builds `Σ (num/den) * x_{l1} * ... * x_{lk}`.
pub fn build<M: Monomial>(field: FieldSpec, ab: &Arc<Alphabet>, raw: &RawTerms) -> Poly<M> {
    let mut p = Poly::zero(field, ab.clone());
    for (letters, num, den) in raw {
        let c = field
            .from_i64(*num)
            .try_div(&field.from_i64(*den))
            .unwrap_or_else(|_| field.from_i64(*num));
        let mut m = Poly::constant(field, ab.clone(), c);
        for &l in letters {
            m = &m * &Poly::var(field, ab.clone(), l);
        }
        p = &p + &m;
    }
    p
}
