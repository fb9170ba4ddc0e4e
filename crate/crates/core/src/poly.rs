//! Sparse polynomials over a [`FieldSpec`], generic in the monomial type.
//!
//! The free algebra ([`crate::ncpoly::NcPoly`]) and the commutative ring
//! ([`crate::cpoly::CPoly`]) differ only in how monomials multiply, so both
//! are instances of [`Poly`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Ordered list of distinct generator names. The order fixes the monomial
/// order: earlier generators are larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::Parse {
                    line: 1,
                    column: 1,
                    message: format!("`{name}` is not a valid generator name"),
                });
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Arc::new(Alphabet { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Polynomial degree; the zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A monomial type. `Ord` must be the deglex order used for canonical
/// printing and leading terms.
pub trait Monomial: Ord + Clone + Hash + fmt::Debug {
    /// Whether monomials (and hence polynomials) commute.
    const COMMUTATIVE: bool;

    fn unit(nvars: usize) -> Self;
    fn generator(index: usize, nvars: usize) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn degree(&self) -> usize;
    /// Generator indices of the monomial read as a product, with
    /// multiplicity.
    fn letters(&self) -> Vec<usize>;
    fn degree_in(&self, generator: usize) -> usize;
    /// Textual form without coefficient; empty for the unit monomial.
    fn render(&self, names: &[String]) -> String;
}

/// Sparse polynomial: monomial → nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<M: Monomial> {
    field: FieldSpec,
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<M, Scalar>,
}

/// `u = u0 + u1` where `u0` collects the terms free of the designated
/// generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSplit<M: Monomial> {
    pub u0: Poly<M>,
    pub u1: Poly<M>,
}

impl<M: Monomial> Poly<M> {
    pub fn zero(field: FieldSpec, alphabet: Arc<Alphabet>) -> Self {
        Poly {
            field,
            alphabet,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, alphabet: Arc<Alphabet>, c: Scalar) -> Self {
        let n = alphabet.len();
        Self::from_terms(field, alphabet, [(M::unit(n), c)])
    }

    pub fn one(field: FieldSpec, alphabet: Arc<Alphabet>) -> Self {
        Self::constant(field, alphabet, field.one())
    }

    pub fn generator(field: FieldSpec, alphabet: Arc<Alphabet>, name: &str) -> Result<Self> {
        let i = alphabet.index_of(name)?;
        Ok(Self::var(field, alphabet, i))
    }

    /// The generator with the given index.
    pub fn var(field: FieldSpec, alphabet: Arc<Alphabet>, index: usize) -> Self {
        let n = alphabet.len();
        Self::from_terms(field, alphabet, [(M::generator(index, n), field.one())])
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(field: FieldSpec, alphabet: Arc<Alphabet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (M, Scalar)>,
    {
        let mut map: BTreeMap<M, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(c.field(), field, "coefficient from a different field");
            match map.get_mut(&m) {
                Some(acc) => *acc = &*acc + &c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Poly {
            field,
            alphabet,
            terms: map,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<M, Scalar> {
        &self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(m) => Degree::Finite(m.degree()),
            None => Degree::MinusInfinity,
        }
    }

    pub fn coefficient(&self, m: &M) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&M::unit(self.alphabet.len()))
    }

    /// Largest term in the monomial order.
    pub fn leading_term(&self) -> Option<(&M, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// Same coefficient field and same alphabet.
    pub fn same_algebra(&self, other: &Self) -> bool {
        self.field == other.field
            && (Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self * other)
    }

    /// `f g - g f`; identically zero in a commutative ring.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(&(self * other) - &(other * self))
    }

    /// Multiplies every coefficient by `c`.
    ///
    /// # Panics
    /// If `c` belongs to a different field.
    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, self.alphabet.clone());
        }
        Poly {
            field: self.field,
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::one(self.field, self.alphabet.clone());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[f^0, f^1, ..., f^k]`.
    pub fn powers(&self, k: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(Self::one(self.field, self.alphabet.clone()));
        for i in 0..k {
            let next = &out[i] * self;
            out.push(next);
        }
        out
    }

    /// Applies the algebra homomorphism sending generator `i` to
    /// `images[i]`. All images must live in one target algebra over the same
    /// field.
    pub fn substitute(&self, images: &[Self]) -> Result<Self> {
        if images.len() != self.alphabet.len() {
            return Err(Error::AlgebraMismatch);
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        if first.field != self.field || images.iter().any(|p| !p.same_algebra(first)) {
            return Err(Error::AlgebraMismatch);
        }
        let mut acc = Self::zero(self.field, first.alphabet.clone());
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.field, first.alphabet.clone(), c.clone());
            for g in m.letters() {
                t = &t * &images[g];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// The endomorphism fixing every generator except `name`, which goes to 0.
    pub fn kill_generator(&self, name: &str) -> Result<Self> {
        let z = self.alphabet.index_of(name)?;
        Ok(self.z_split_index(z).u0)
    }

    /// Splits `u` into the terms free of generator `z` and the rest.
    pub fn z_split(&self, z: &str) -> Result<ZSplit<M>> {
        let z = self.alphabet.index_of(z)?;
        Ok(self.z_split_index(z))
    }

    fn z_split_index(&self, z: usize) -> ZSplit<M> {
        let (with, without): (BTreeMap<_, _>, BTreeMap<_, _>) = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone()))
            .partition(|(m, _)| m.degree_in(z) > 0);
        let mk = |terms| Poly {
            field: self.field,
            alphabet: self.alphabet.clone(),
            terms,
        };
        ZSplit {
            u0: mk(without),
            u1: mk(with),
        }
    }

    /// Whether generator `z` occurs in some term.
    pub fn mentions(&self, z: usize) -> bool {
        self.terms.keys().any(|m| m.degree_in(z) > 0)
    }

    /// `h(u) = Σ coeffs[k] u^k`, by Horner's rule.
    pub fn eval_univariate(coeffs: &[Scalar], u: &Self) -> Self {
        let mut acc = Self::zero(u.field, u.alphabet.clone());
        for c in coeffs.iter().rev() {
            acc = &(&acc * u) + &Self::constant(u.field, u.alphabet.clone(), c.clone());
        }
        acc
    }
}

impl<M: Monomial> Add for &Poly<M> {
    type Output = Poly<M>;

    /// # Panics
    /// If the operands live in different algebras; use `try_add` to get an
    /// error instead.
    fn add(self, rhs: &Poly<M>) -> Poly<M> {
        assert!(
            self.same_algebra(rhs),
            "polynomials from different algebras"
        );
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(acc) => {
                    *acc = &*acc + c;
                    if acc.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Poly {
            field: self.field,
            alphabet: self.alphabet.clone(),
            terms,
        }
    }
}

impl<M: Monomial> Neg for &Poly<M> {
    type Output = Poly<M>;

    fn neg(self) -> Poly<M> {
        Poly {
            field: self.field,
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<M: Monomial> Sub for &Poly<M> {
    type Output = Poly<M>;

    fn sub(self, rhs: &Poly<M>) -> Poly<M> {
        self + &(-rhs)
    }
}

impl<M: Monomial> Mul for &Poly<M> {
    type Output = Poly<M>;

    /// # Panics
    /// If the operands live in different algebras.
    fn mul(self, rhs: &Poly<M>) -> Poly<M> {
        assert!(
            self.same_algebra(rhs),
            "polynomials from different algebras"
        );
        let mut acc: HashMap<M, Scalar> = HashMap::with_capacity(self.len() * rhs.len());
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let prod = x * y;
                match acc.entry(a.mul(b)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &prod;
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Poly {
            field: self.field,
            alphabet: self.alphabet.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// Canonical text: terms in descending monomial order, `c*m`, coefficient 1
/// omitted, negative rationals rendered as subtraction.
impl<M: Monomial> fmt::Display for Poly<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = m.render(self.alphabet.names());
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}
