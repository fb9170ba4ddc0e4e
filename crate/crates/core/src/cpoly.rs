//! The commutative polynomial ring `K[x_1, ..., x_n]`: partial derivatives
//! and 2×2 Jacobian determinants.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::coeff::{FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::poly::{Alphabet, Degree, Monomial, Poly};

/// Exponent vector, one entry per generator.
///
/// Ordered deglex: total degree first, then lexicographically with the
/// first generator most significant (`x^2 > x*y > y^2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpVec(SmallVec<[u32; 4]>);

impl ExpVec {
    pub fn new<I: IntoIterator<Item = u32>>(exps: I) -> Self {
        ExpVec(exps.into_iter().collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for ExpVec {
    const COMMUTATIVE: bool = true;

    fn unit(nvars: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, nvars))
    }

    fn generator(index: usize, nvars: usize) -> Self {
        let mut e = Self::unit(nvars);
        e.0[index] = 1;
        e
    }

    fn mul(&self, other: &Self) -> Self {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn degree(&self) -> usize {
        self.total_degree()
    }

    fn letters(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    fn degree_in(&self, generator: usize) -> usize {
        self.0[generator] as usize
    }

    fn render(&self, names: &[String]) -> String {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| match e {
                1 => names[i].clone(),
                _ => format!("{}^{}", names[i], e),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub type CPoly = Poly<ExpVec>;

impl CPoly {
    /// Formal partial derivative with respect to generator `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<CPoly> {
        if i >= self.alphabet().len() {
            return Err(Error::UnknownGenerator(format!("#{i}")));
        }
        let field = self.field();
        let terms = self.terms().iter().filter_map(|(m, c)| {
            let e = m.exponents()[i];
            (e > 0).then(|| {
                let mut d = m.clone();
                d.0[i] -= 1;
                (d, c * &field.from_i64(e as i64))
            })
        });
        Ok(CPoly::from_terms(field, self.alphabet().clone(), terms))
    }

    /// Substitutes 0 for the generator `name`.
    pub fn kill_variable(&self, name: &str) -> Result<CPoly> {
        self.kill_generator(name)
    }
}

/// `∂f/∂x_i · ∂g/∂x_j − ∂f/∂x_j · ∂g/∂x_i`, for `i < j`.
pub fn jacobian_det(f: &CPoly, g: &CPoly, i: usize, j: usize) -> Result<CPoly> {
    if i >= j || j >= f.alphabet().len() {
        return Err(Error::BadIndexPair(i, j));
    }
    if !f.same_algebra(g) {
        return Err(Error::AlgebraMismatch);
    }
    let (fi, fj) = (f.partial_derivative(i)?, f.partial_derivative(j)?);
    let (gi, gj) = (g.partial_derivative(i)?, g.partial_derivative(j)?);
    Ok(&(&fi * &gj) - &(&fj * &gi))
}

/// All pairs `(i, j)` with `i < j < n`, lexicographically.
pub fn index_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn monomials_of_degree(n: usize, k: u32, out: &mut Vec<ExpVec>, prefix: &mut Vec<u32>) {
    if prefix.len() + 1 == n {
        prefix.push(k);
        out.push(ExpVec::new(prefix.iter().copied()));
        prefix.pop();
        return;
    }
    for e in (0..=k).rev() {
        prefix.push(e);
        monomials_of_degree(n, k - e, out, prefix);
        prefix.pop();
    }
}

/// All monomials of total degree `<= d`, by degree and, within a degree,
/// in descending monomial order (`1, x, y, x^2, x*y, y^2, ...`).
pub fn monomial_basis(n: usize, d: usize) -> Vec<ExpVec> {
    let mut out = vec![ExpVec::unit(n)];
    if n == 0 {
        return out;
    }
    for k in 1..=d as u32 {
        monomials_of_degree(n, k, &mut out, &mut Vec::new());
    }
    out
}

/// Coordinates of `f` in [`monomial_basis`].
pub fn coefficient_vector(f: &CPoly, d: usize) -> Result<Vec<Scalar>> {
    if let Degree::Finite(deg) = f.degree() {
        if deg > d {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                bound: d,
            });
        }
    }
    let basis = monomial_basis(f.alphabet().len(), d);
    let index: HashMap<&ExpVec, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = vec![f.field().zero(); basis.len()];
    for (m, c) in f.terms() {
        v[index[m]] = c.clone();
    }
    Ok(v)
}

/// Inverse of [`coefficient_vector`].
pub fn from_vector(
    field: FieldSpec,
    alphabet: Arc<Alphabet>,
    v: &[Scalar],
    d: usize,
) -> Result<CPoly> {
    let basis = monomial_basis(alphabet.len(), d);
    if v.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            found: v.len(),
        });
    }
    Ok(CPoly::from_terms(
        field,
        alphabet,
        basis.into_iter().zip(v.iter().cloned()),
    ))
}
