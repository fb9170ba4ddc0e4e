//! The free associative algebra `K<x_1, ..., x_n>`.

use std::cmp::Ordering;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::coeff::{FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::poly::{Alphabet, Degree, Monomial, Poly};

/// A word over the alphabet, stored as generator indices.
///
/// Ordered deglex: longer words are larger; words of equal length compare
/// letter by letter with earlier generators larger, so `x*y > y*x` for the
/// alphabet `(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u32; 8]>);

impl Word {
    pub fn new<I: IntoIterator<Item = usize>>(letters: I) -> Self {
        Word(letters.into_iter().map(|l| l as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for Word {
    const COMMUTATIVE: bool = false;

    fn unit(_nvars: usize) -> Self {
        Word::default()
    }

    fn generator(index: usize, _nvars: usize) -> Self {
        Word::new([index])
    }

    fn mul(&self, other: &Self) -> Self {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    fn degree(&self) -> usize {
        self.0.len()
    }

    fn letters(&self) -> Vec<usize> {
        self.letters_iter().collect()
    }

    fn degree_in(&self, generator: usize) -> usize {
        self.0.iter().filter(|&&l| l as usize == generator).count()
    }

    fn render(&self, names: &[String]) -> String {
        self.letters_iter()
            .map(|l| names[l].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub type NcPoly = Poly<Word>;

/// Number of words of length at most `d` over `n` letters.
pub fn word_basis_size(n: usize, d: usize) -> Result<usize> {
    let overflow = || Error::MatrixTooLarge {
        entries: usize::MAX,
        limit: usize::MAX,
    };
    let mut total = 0usize;
    let mut layer = 1usize;
    for k in 0..=d {
        total = total.checked_add(layer).ok_or_else(overflow)?;
        if k < d {
            layer = layer.checked_mul(n).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// All words of length at most `d`, by length and then in index-lexicographic
/// order (`1, x, y, x*x, x*y, y*x, y*y, ...`).
pub fn word_basis(n: usize, d: usize) -> Vec<Word> {
    let mut out = vec![Word::default()];
    let mut layer = vec![Word::default()];
    for _ in 0..d {
        if n == 0 {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|w| (0..n).map(move |l| w.mul(&Word::new([l]))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Position of `w` in [`word_basis`].
pub fn word_index(w: &Word, n: usize) -> usize {
    let offset: usize = (0..w.len()).map(|k| n.pow(k as u32)).sum();
    offset + w.letters_iter().fold(0, |acc, l| acc * n + l)
}

/// Coordinates of `f` in the basis of all words of length `<= d`.
pub fn coefficient_vector(f: &NcPoly, d: usize) -> Result<Vec<Scalar>> {
    if let Degree::Finite(deg) = f.degree() {
        if deg > d {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                bound: d,
            });
        }
    }
    let n = f.alphabet().len();
    let mut v = vec![f.field().zero(); word_basis_size(n, d)?];
    for (w, c) in f.terms() {
        v[word_index(w, n)] = c.clone();
    }
    Ok(v)
}

/// Inverse of [`coefficient_vector`].
pub fn from_vector(
    field: FieldSpec,
    alphabet: Arc<Alphabet>,
    v: &[Scalar],
    d: usize,
) -> Result<NcPoly> {
    let n = alphabet.len();
    let expected = word_basis_size(n, d)?;
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    let terms = word_basis(n, d).into_iter().zip(v.iter().cloned());
    Ok(NcPoly::from_terms(field, alphabet, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (FieldSpec, Arc<Alphabet>, NcPoly, NcPoly) {
        let q = FieldSpec::rationals();
        let a = Alphabet::new(["x", "y"]).unwrap();
        let x = NcPoly::var(q, a.clone(), 0);
        let y = NcPoly::var(q, a.clone(), 1);
        (q, a, x, y)
    }

    #[test]
    fn word_order_is_deglex_with_first_generator_largest() {
        let xy = Word::new([0, 1]);
        let yx = Word::new([1, 0]);
        assert!(xy > yx);
        assert!(Word::new([1, 1]) > Word::new([0]));
        assert!(Word::new([0]) > Word::new([1]));
        assert!(Word::new([1]) > Word::default());
    }

    #[test]
    fn noncommutative_products() {
        let (_, _, x, y) = setup();
        let xy = &x * &y;
        let yx = &y * &x;
        assert_ne!(xy, yx);
        assert_eq!(x.commutator(&y).unwrap().to_string(), "x*y - y*x");
        let s = &x + &y;
        assert_eq!(s.power(2).to_string(), "x*x + x*y + y*x + y*y");
        assert_eq!(s.power(2), &s * &s);
        assert_eq!(x.power(3).to_string(), "x*x*x");
        assert_eq!(x.power(0).to_string(), "1");
    }

    #[test]
    fn addition_examples() {
        let (q, a, x, y) = setup();
        assert_eq!((&(&x + &y) + &(&x - &y)).to_string(), "2*x");
        let f = &(&x * &y) + &x;
        assert_eq!(&f + &NcPoly::zero(q, a), f);
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn commutator_examples() {
        let (_, _, x, y) = setup();
        let s = &x + &y;
        assert!(s.commutator(&s).unwrap().is_zero());
        assert!(s.commutator(&s.power(2)).unwrap().is_zero());
    }

    #[test]
    fn substitution_examples() {
        let (q, a, x, y) = setup();
        let f = &(&x * &y) + &x;
        let zero = NcPoly::zero(q, a.clone());
        assert_eq!(f.substitute(&[x.clone(), zero]).unwrap(), x);
        assert_eq!(f.substitute(&[x.clone(), y.clone()]).unwrap(), f);
        assert_eq!(f.kill_generator("y").unwrap(), x);
    }

    #[test]
    fn z_split_examples() {
        let q = FieldSpec::rationals();
        let a = Alphabet::new(["x", "z"]).unwrap();
        let x = NcPoly::var(q, a.clone(), 0);
        let z = NcPoly::var(q, a.clone(), 1);
        let u = &(&x + &(&z * &x)) + &z.power(2);
        let s = u.z_split("z").unwrap();
        assert_eq!(s.u0, x);
        assert_eq!(s.u1, &(&z * &x) + &z.power(2));
        let s = x.z_split("z").unwrap();
        assert_eq!((s.u0, s.u1.is_zero()), (x.clone(), true));
        let s = z.z_split("z").unwrap();
        assert!(s.u0.is_zero());
        assert_eq!(s.u1, z);
        assert_eq!(u.z_split("w"), Err(Error::UnknownGenerator("w".into())));
    }

    #[test]
    fn coefficient_vector_examples() {
        let (q, a, x, y) = setup();
        let f = &NcPoly::constant(q, a.clone(), q.from_i64(2)) + &y.scale(&q.from_i64(3));
        assert_eq!(
            coefficient_vector(&f, 1).unwrap(),
            vec![q.from_i64(2), q.zero(), q.from_i64(3)]
        );
        let v = coefficient_vector(&(&x * &y), 2).unwrap();
        let basis = word_basis(2, 2);
        let pos = basis.iter().position(|w| *w == Word::new([0, 1])).unwrap();
        assert_eq!(pos, 4);
        for (i, c) in v.iter().enumerate() {
            assert_eq!(c.is_one(), i == pos);
        }
        assert_eq!(
            coefficient_vector(&x.power(3), 2),
            Err(Error::DegreeTooLarge {
                degree: 3,
                bound: 2
            })
        );
        assert_eq!(from_vector(q, a, &v, 2).unwrap(), &x * &y);
    }

    #[test]
    fn word_index_matches_basis_order() {
        for n in 1..4 {
            for (i, w) in word_basis(n, 4).iter().enumerate() {
                assert_eq!(word_index(w, n), i);
            }
            assert_eq!(word_basis(n, 4).len(), word_basis_size(n, 4).unwrap());
        }
    }

    #[test]
    fn zero_polynomial_degree_is_sentinel() {
        let (q, a, x, _) = setup();
        assert_eq!(NcPoly::zero(q, a).degree(), Degree::MinusInfinity);
        assert_eq!(x.degree(), Degree::Finite(1));
    }

    #[test]
    fn mixing_algebras_is_an_error() {
        let (_, _, x, _) = setup();
        let other = NcPoly::var(FieldSpec::prime(5).unwrap(), x.alphabet().clone(), 0);
        assert_eq!(x.try_add(&other), Err(Error::AlgebraMismatch));
        let b = Alphabet::new(["x", "w"]).unwrap();
        let w = NcPoly::var(FieldSpec::rationals(), b, 0);
        assert_eq!(x.try_mul(&w), Err(Error::AlgebraMismatch));
        assert_eq!(x.commutator(&w), Err(Error::AlgebraMismatch));
    }
}
