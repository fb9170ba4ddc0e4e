//! Centralizer roots and univariate decomposition.
//!
//! For nonconstant `f` the set of elements algebraically dependent on `f` is
//! a polynomial algebra `K[u]`. Since `f ∈ K[u]` and degrees add, `deg u`
//! divides `deg f`, and the kernel of the dependence map restricted to
//! degree `<= b` is `span{1, u, ..., u^⌊b/deg u⌋}`. The root search only
//! builds kernels for the proper divisors `b` of `deg f`, smallest first.

use std::collections::BTreeMap;

use crate::coeff::Scalar;
use crate::cpoly::{index_pairs, jacobian_det, monomial_basis, CPoly, ExpVec};
use crate::dependence::require_char_zero;
use crate::error::{Error, Result};
use crate::linalg::{ColumnReducer, Limits};
use crate::ncpoly::{word_basis, word_basis_size, NcPoly, Word};
use crate::poly::{Degree, Monomial, Poly};

/// Which normalizations were applied to a root. Both are always set; the
/// record makes the convention explicit in serialized output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub monic_deglex: bool,
    pub zero_constant_term: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootResult<M: Monomial> {
    /// Generator of the centralizer: leading coefficient 1, constant term 0.
    pub u: Poly<M>,
    pub normalization: Normalization,
    /// Dimension of the centralizer intersected with degree `<= deg f`,
    /// that is `1 + deg f / deg u`.
    pub kernel_dimension: usize,
}

/// Coefficients `[c_0, ..., c_m]` of `h` with `f = h(u)`; empty for `f = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub coefficients: Vec<Scalar>,
}

impl Decomposition {
    pub fn evaluate<M: Monomial>(&self, u: &Poly<M>) -> Poly<M> {
        Poly::eval_univariate(&self.coefficients, u)
    }
}

impl std::fmt::Display for Decomposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Subtracts the constant term and scales the leading coefficient to 1.
pub fn normalize<M: Monomial>(u: &Poly<M>) -> Poly<M> {
    let c = u.constant_term();
    let shifted = u - &Poly::constant(u.field(), u.alphabet().clone(), c);
    match shifted.leading_term() {
        Some((_, lc)) => {
            let inv = lc.inv().expect("nonzero leading coefficient");
            shifted.scale(&inv)
        }
        None => shifted,
    }
}

/// Root `u` with `C(f) = K[u]` in the free algebra, where `C(f)` is the set
/// of elements commuting with `f`.
pub fn centralizer_root_free(f: &NcPoly) -> Result<RootResult<Word>> {
    centralizer_root_free_with_limits(f, &Limits::default())
}

pub fn centralizer_root_free_with_limits(f: &NcPoly, limits: &Limits) -> Result<RootResult<Word>> {
    let d = nonconstant_degree(f)?;
    let u = search_root(f, d, |bound| centralizer_kernel_free(f, bound, limits))?;
    if !f.commutator(&u)?.is_zero() {
        return Err(Error::InternalVerificationFailure(format!(
            "computed root {u} does not commute with the input"
        )));
    }
    finish_root(f, u, limits)
}

/// Basis of `C(f) ∩ {deg <= bound}`: the kernel of `g ↦ [f, g]` on words
/// of length at most `bound`, as canonical (reduced echelon) vectors.
pub fn centralizer_kernel_free(f: &NcPoly, bound: usize, limits: &Limits) -> Result<Vec<NcPoly>> {
    let n = f.alphabet().len();
    limits.check(word_basis_size(n, bound)?)?;
    let basis = word_basis(n, bound);
    let field = f.field();
    let alphabet = f.alphabet().clone();
    kernel_elements(f, &basis, limits, |w| {
        let g = Poly::from_terms(field, alphabet.clone(), [(w.clone(), field.one())]);
        (&(f * &g) - &(&g * f)).terms().clone()
    })
}

/// Root `u` with `C(f) = K[u]` in the commutative ring, where `C(f)` is the
/// set of `g` with every Jacobian `J_{x_i,x_j}(f, g)` zero. Characteristic
/// zero only.
pub fn centralizer_root_comm(f: &CPoly) -> Result<RootResult<ExpVec>> {
    centralizer_root_comm_with_limits(f, &Limits::default())
}

pub fn centralizer_root_comm_with_limits(f: &CPoly, limits: &Limits) -> Result<RootResult<ExpVec>> {
    require_char_zero(f)?;
    let d = nonconstant_degree(f)?;
    let u = search_root(f, d, |bound| centralizer_kernel_comm(f, bound, limits))?;
    let n = f.alphabet().len();
    for (i, j) in index_pairs(n) {
        if !jacobian_det(f, &u, i, j)?.is_zero() {
            return Err(Error::InternalVerificationFailure(format!(
                "computed root {u} has a nonzero Jacobian against the input"
            )));
        }
    }
    finish_root(f, u, limits)
}

/// Basis of `C(f) ∩ {deg <= bound}` in the commutative ring: the kernel of
/// `g ↦ (J_{x_i,x_j}(f, g))_{i<j}` on monomials of degree at most `bound`.
pub fn centralizer_kernel_comm(f: &CPoly, bound: usize, limits: &Limits) -> Result<Vec<CPoly>> {
    require_char_zero(f)?;
    let n = f.alphabet().len();
    let basis = monomial_basis(n, bound);
    limits.check(basis.len())?;
    let field = f.field();
    let alphabet = f.alphabet().clone();
    let pairs = index_pairs(n);
    let partials: Vec<CPoly> = (0..n)
        .map(|i| f.partial_derivative(i))
        .collect::<Result<_>>()?;
    kernel_elements(f, &basis, limits, |m| {
        let g = CPoly::from_terms(field, alphabet.clone(), [(m.clone(), field.one())]);
        let dg: Vec<CPoly> = (0..n)
            .map(|i| g.partial_derivative(i).expect("index in range"))
            .collect();
        let mut col = BTreeMap::new();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let jac = &(&partials[i] * &dg[j]) - &(&partials[j] * &dg[i]);
            for (e, c) in jac.terms() {
                col.insert((k, e.clone()), c.clone());
            }
        }
        col
    })
}

fn nonconstant_degree<M: Monomial>(f: &Poly<M>) -> Result<usize> {
    match f.degree() {
        Degree::Finite(d) if d > 0 => Ok(d),
        _ => Err(Error::ConstantInput),
    }
}

/// `deg u` divides `d`, and below degree `deg u` the centralizer holds only
/// constants, so the first divisor bound whose kernel has a nonconstant
/// element yields `u`. When no proper divisor does, `u` is `f` itself.
fn search_root<M, F>(f: &Poly<M>, d: usize, kernel: F) -> Result<Poly<M>>
where
    M: Monomial,
    F: Fn(usize) -> Result<Vec<Poly<M>>>,
{
    for bound in (1..d).filter(|&b| d.is_multiple_of(b)) {
        let elements = kernel(bound)?;
        let Some(min_degree) = elements
            .iter()
            .filter_map(|p| p.degree().finite())
            .filter(|&k| k > 0)
            .min()
        else {
            continue;
        };
        let mut candidates = elements
            .iter()
            .filter(|p| p.degree() == Degree::Finite(min_degree));
        let root = candidates.next().expect("minimum is attained");
        if candidates.next().is_some() {
            return Err(Error::InternalVerificationFailure(format!(
                "several independent centralizer elements of degree {min_degree}"
            )));
        }
        return Ok(normalize(root));
    }
    Ok(normalize(f))
}

fn finish_root<M: Monomial>(f: &Poly<M>, u: Poly<M>, limits: &Limits) -> Result<RootResult<M>> {
    if decompose_with_limits(f, &u, limits)?.is_none() {
        return Err(Error::InternalVerificationFailure(format!(
            "input is not a polynomial in the computed root {u}"
        )));
    }
    let (d, e) = (f.degree().finite(), u.degree().finite());
    let kernel_dimension = 1 + d.expect("nonconstant") / e.expect("nonconstant");
    Ok(RootResult {
        u,
        normalization: Normalization {
            monic_deglex: true,
            zero_constant_term: true,
        },
        kernel_dimension,
    })
}

fn kernel_elements<M, K, F>(
    f: &Poly<M>,
    basis: &[M],
    limits: &Limits,
    image: F,
) -> Result<Vec<Poly<M>>>
where
    M: Monomial,
    K: Ord + Clone,
    F: Fn(&M) -> BTreeMap<K, Scalar>,
{
    let mut reducer = ColumnReducer::new(f.field(), *limits);
    for m in basis {
        reducer.push(image(m))?;
    }
    Ok(reducer
        .kernel()
        .iter()
        .map(|v| {
            Poly::from_terms(
                f.field(),
                f.alphabet().clone(),
                basis.iter().cloned().zip(v.iter().cloned()),
            )
        })
        .collect())
}

/// Writes `f` as `h(u)` when possible.
///
/// Requires `deg u | deg f`; with `m = deg f / deg u` the powers
/// `1, u, ..., u^m` are linearly independent and `f` is solved for in their
/// span. Returns `None` when `f ∉ K[u]`.
pub fn decompose<M: Monomial>(f: &Poly<M>, u: &Poly<M>) -> Result<Option<Decomposition>> {
    decompose_with_limits(f, u, &Limits::default())
}

pub fn decompose_with_limits<M: Monomial>(
    f: &Poly<M>,
    u: &Poly<M>,
    limits: &Limits,
) -> Result<Option<Decomposition>> {
    if !f.same_algebra(u) {
        return Err(Error::AlgebraMismatch);
    }
    let du = match u.degree() {
        Degree::Finite(d) if d > 0 => d,
        _ => return Err(Error::ConstantU),
    };
    let df = match f.degree() {
        Degree::MinusInfinity => {
            return Ok(Some(Decomposition {
                coefficients: Vec::new(),
            }))
        }
        Degree::Finite(d) => d,
    };
    if df % du != 0 {
        return Ok(None);
    }
    let m = df / du;
    let mut reducer: ColumnReducer<M> = ColumnReducer::new(f.field(), *limits);
    for p in u.powers(m) {
        if reducer.push(p.terms().clone())?.is_some() {
            return Err(Error::InternalVerificationFailure(
                "powers of a nonconstant polynomial are dependent".into(),
            ));
        }
    }
    let Some(comb) = reducer.push(f.terms().clone())? else {
        return Ok(None);
    };
    // comb has 1 at f's column: f + Σ comb[k] u^k = 0
    let coefficients: Vec<Scalar> = (0..=m)
        .map(|k| comb.get(&k).map_or_else(|| f.field().zero(), |c| -c))
        .collect();
    debug_assert!(!coefficients[m].is_zero());
    Ok(Some(Decomposition { coefficients }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FieldSpec;
    use crate::poly::Alphabet;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter()
            .map(|&x| FieldSpec::rationals().from_i64(x))
            .collect()
    }

    fn free() -> (NcPoly, NcPoly) {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let q = FieldSpec::rationals();
        (NcPoly::var(q, a.clone(), 0), NcPoly::var(q, a, 1))
    }

    fn comm() -> (CPoly, CPoly) {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let q = FieldSpec::rationals();
        (CPoly::var(q, a.clone(), 0), CPoly::var(q, a, 1))
    }

    #[test]
    fn free_roots() {
        let (x, y) = free();
        let r = centralizer_root_free(&x.power(2)).unwrap();
        assert_eq!(r.u, x);
        assert_eq!(r.kernel_dimension, 3);

        let s = &x + &y;
        let f = &s.power(3) + &s.scale(&s.field().from_i64(2));
        let r = centralizer_root_free(&f).unwrap();
        assert_eq!(r.u, s);
        assert_eq!(
            decompose(&f, &r.u).unwrap().unwrap().coefficients,
            ints(&[0, 2, 0, 1])
        );

        let u = &(&x * &y) + &x;
        let f = &u.power(2) + &u.scale(&u.field().from_i64(3));
        let r = centralizer_root_free(&f).unwrap();
        assert_eq!(r.u, u);
        assert_eq!(
            decompose(&f, &u).unwrap().unwrap().coefficients,
            ints(&[0, 3, 1])
        );
    }

    #[test]
    fn comm_roots() {
        let (x, y) = comm();
        assert_eq!(centralizer_root_comm(&x.power(2)).unwrap().u, x);

        let u = &x.power(2) * &y;
        let f = &x.power(4) * &y.power(2);
        let r = centralizer_root_comm(&f).unwrap();
        assert_eq!(r.u, u);
        assert_eq!(
            decompose(&f, &u).unwrap().unwrap().coefficients,
            ints(&[0, 0, 1])
        );

        let s = &x + &y;
        assert_eq!(centralizer_root_comm(&s).unwrap().u, s);
    }

    #[test]
    fn root_errors() {
        let (x, _) = free();
        let c = NcPoly::constant(x.field(), x.alphabet().clone(), x.field().from_i64(3));
        assert_eq!(centralizer_root_free(&c), Err(Error::ConstantInput));

        let gf5 = FieldSpec::prime(5).unwrap();
        let a = Alphabet::new(["x", "y"]).unwrap();
        let x5 = CPoly::var(gf5, a, 0);
        assert_eq!(
            centralizer_root_comm(&x5.power(2)),
            Err(Error::CharacteristicNotZero(5))
        );

        let f = x.power(4);
        assert!(matches!(
            centralizer_root_free_with_limits(&f, &Limits { max_entries: 2 }),
            Err(Error::MatrixTooLarge { .. })
        ));
    }

    #[test]
    fn divisor_search_matches_full_kernel() {
        let (x, y) = free();
        let u = &(&x * &y) + &x;
        let w = &(&y * &y) + &x;
        for f in [
            u.power(2),
            &u.power(3) + &u,
            (&u * &w).power(1),
            &w.power(2) + &x,
        ] {
            let r = centralizer_root_free(&f).unwrap();
            let d = f.degree().finite().unwrap();
            let full = centralizer_kernel_free(&f, d, &Limits::default()).unwrap();
            assert_eq!(full.len(), r.kernel_dimension, "{f}");
            let lowest = full
                .iter()
                .filter(|p| !p.is_constant())
                .min_by_key(|p| p.degree())
                .unwrap();
            assert_eq!(normalize(lowest), r.u, "{f}");
        }
        let (x, y) = comm();
        let u = &x.power(2) * &y;
        for f in [u.power(3), &(&x + &y).power(2) + &y, &x * &y] {
            let r = centralizer_root_comm(&f).unwrap();
            let d = f.degree().finite().unwrap();
            let full = centralizer_kernel_comm(&f, d, &Limits::default()).unwrap();
            assert_eq!(full.len(), r.kernel_dimension, "{f}");
        }
    }

    #[test]
    fn decompose_examples() {
        let (x, y) = free();
        assert_eq!(
            decompose(&x.power(2), &x).unwrap().unwrap().coefficients,
            ints(&[0, 0, 1])
        );
        assert_eq!(decompose(&(&x * &y), &x).unwrap(), None);
        assert_eq!(decompose(&x.power(3), &x.power(2)).unwrap(), None);
        let c = NcPoly::constant(x.field(), x.alphabet().clone(), x.field().from_i64(5));
        assert_eq!(decompose(&x, &c), Err(Error::ConstantU));
        assert_eq!(decompose(&c, &x).unwrap().unwrap().coefficients, ints(&[5]));
        let zero = NcPoly::zero(x.field(), x.alphabet().clone());
        assert!(decompose(&zero, &x)
            .unwrap()
            .unwrap()
            .coefficients
            .is_empty());
    }

    #[test]
    fn normalization_is_idempotent() {
        let (x, y) = free();
        let q = x.field();
        let u = &(&(&x * &y).scale(&q.from_i64(3)) + &y)
            + &NcPoly::constant(q, x.alphabet().clone(), q.from_i64(7));
        let n = normalize(&u);
        assert_eq!(n.to_string(), "x*y + 1/3*y");
        assert_eq!(normalize(&n), n);
    }
}
