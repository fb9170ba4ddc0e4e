//! Algebraic dependence of two polynomials.
//!
//! In the free algebra two elements are dependent exactly when they commute;
//! in the commutative ring over a field of characteristic zero, exactly when
//! every 2×2 Jacobian determinant vanishes. [`annihilator_oracle`] is an
//! independent, bounded search for an actual relation `P(f, g) = 0` used to
//! cross-check both criteria.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::coeff::Scalar;
use crate::cpoly::{index_pairs, jacobian_det, CPoly, ExpVec};
use crate::error::{Error, Result};
use crate::linalg::{ColumnReducer, Limits};
use crate::ncpoly::NcPoly;
use crate::poly::{Alphabet, Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `[f, g]`.
    Commutator(NcPoly),
    /// `J_{x_i,x_j}(f, g)` for every `i < j`.
    Jacobians(Vec<((usize, usize), CPoly)>),
}

impl Witness {
    pub fn all_zero(&self) -> bool {
        match self {
            Witness::Commutator(c) => c.is_zero(),
            Witness::Jacobians(js) => js.iter().all(|(_, j)| j.is_zero()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceVerdict {
    pub dependent: bool,
    pub witness: Witness,
}

/// Commutator criterion, valid over any field.
pub fn dep_free(f: &NcPoly, g: &NcPoly) -> Result<DependenceVerdict> {
    let witness = Witness::Commutator(f.commutator(g)?);
    Ok(DependenceVerdict {
        dependent: witness.all_zero(),
        witness,
    })
}

/// Jacobian criterion. Refuses fields of positive characteristic, where it
/// does not hold (`∂(x^p)/∂x = 0`).
pub fn dep_comm(f: &CPoly, g: &CPoly) -> Result<DependenceVerdict> {
    if !f.same_algebra(g) {
        return Err(Error::AlgebraMismatch);
    }
    require_char_zero(f)?;
    let witness = Witness::Jacobians(
        index_pairs(f.alphabet().len())
            .into_iter()
            .map(|(i, j)| Ok(((i, j), jacobian_det(f, g, i, j)?)))
            .collect::<Result<_>>()?,
    );
    Ok(DependenceVerdict {
        dependent: witness.all_zero(),
        witness,
    })
}

pub(crate) fn require_char_zero<M: Monomial>(f: &Poly<M>) -> Result<()> {
    match f.field().characteristic() {
        0 => Ok(()),
        p => Err(Error::CharacteristicNotZero(p)),
    }
}

/// A nonzero `P(s, t)` with `P(f, g) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilator {
    /// Polynomial in the fresh commuting variables `s, t`.
    pub p: CPoly,
    /// `(a, b)`: exponent bounds for `s` and `t` used in the search.
    pub bounds: (usize, usize),
}

impl Annihilator {
    /// `Σ c_ij f^i g^j`. For noncommutative `f, g` this is only meaningful
    /// when they commute.
    pub fn evaluate<M: Monomial>(&self, f: &Poly<M>, g: &Poly<M>) -> Poly<M> {
        let (a, b) = self.p.terms().keys().fold((0, 0), |(a, b), m| {
            (
                a.max(m.exponents()[0] as usize),
                b.max(m.exponents()[1] as usize),
            )
        });
        let fp = f.powers(a);
        let gp = g.powers(b);
        let mut acc = Poly::zero(f.field(), f.alphabet().clone());
        for (m, c) in self.p.terms() {
            let (i, j) = (m.exponents()[0] as usize, m.exponents()[1] as usize);
            acc = &acc + &(&fp[i] * &gp[j]).scale(c);
        }
        acc
    }
}

/// The alphabet `(s, t)` annihilators live in.
pub fn annihilator_alphabet() -> Arc<Alphabet> {
    static ST: OnceLock<Arc<Alphabet>> = OnceLock::new();
    ST.get_or_init(|| Alphabet::new(["s", "t"]).expect("valid names"))
        .clone()
}

/// Exponent pairs `(i, j)` with `i <= a`, `j <= b`, ordered deglex
/// (`1, s, t, s^2, s*t, t^2, ...`).
pub fn bidegree_columns(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..=a + b)
        .flat_map(|deg| {
            (0..=deg.min(a))
                .rev()
                .map(move |i| (i, deg - i))
                .filter(move |&(_, j)| j <= b)
        })
        .collect()
}

/// Bounded search for an annihilating polynomial.
///
/// Assembles the coefficient columns of `f^i g^j` (`i <= a`, `j <= b`) in
/// [`bidegree_columns`] order and returns the first canonical kernel vector
/// as `P`, or `None` when the products are linearly independent. `None`
/// does not prove independence beyond these bounds.
pub fn annihilator_oracle<M: Monomial>(
    f: &Poly<M>,
    g: &Poly<M>,
    a: usize,
    b: usize,
) -> Result<Option<Annihilator>> {
    annihilator_oracle_with_limits(f, g, a, b, &Limits::default())
}

pub fn annihilator_oracle_with_limits<M: Monomial>(
    f: &Poly<M>,
    g: &Poly<M>,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<Option<Annihilator>> {
    if !f.commutator(g)?.is_zero() {
        return Err(Error::NonCommutingPair);
    }
    let columns = bidegree_columns(a, b);
    let fp = f.powers(a);
    let gp = g.powers(b);
    let mut reducer: ColumnReducer<M> = ColumnReducer::new(f.field(), *limits);
    for &(i, j) in &columns {
        let prod = &fp[i] * &gp[j];
        let col: BTreeMap<M, Scalar> = prod.terms().clone();
        if let Some(comb) = reducer.push(col)? {
            // Canonical kernel vectors only involve earlier columns, so the
            // first dependent column already yields the first basis vector.
            let terms = comb.iter().map(|(&k, c)| {
                let (i, j) = columns[k];
                (ExpVec::new([i as u32, j as u32]), c.clone())
            });
            let p = CPoly::from_terms(f.field(), annihilator_alphabet(), terms);
            return Ok(Some(Annihilator { p, bounds: (a, b) }));
        }
    }
    Ok(None)
}
