//! Rank-two cancellation, run constructively.
//!
//! Given generators `v, w` of a subalgebra `R` and a designated generator
//! `z`, the pipeline finds the root `u` with `v, w ∈ K[u]`, splits
//! `u = u0 + u1` by `z`-degree and shows that `v|_{z=0}` and `w|_{z=0}` are
//! polynomials in `u0`, so `R|_{z=0} = K[u0]`.

use crate::centralizer::{
    centralizer_root_comm, centralizer_root_free, decompose, Decomposition, RootResult,
};
use crate::cpoly::{CPoly, ExpVec};
use crate::dependence::{dep_comm, dep_free, require_char_zero};
use crate::error::{Error, Result};
use crate::ncpoly::{NcPoly, Word};
use crate::poly::{Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationResult<M: Monomial> {
    /// Root with `v, w ∈ K[u]`.
    pub u: Poly<M>,
    /// Terms of `u` free of `z`.
    pub u0: Poly<M>,
    /// Terms of `u` of `z`-degree at least one.
    pub u1: Poly<M>,
    /// `v|_{z=0} = h_v(u0)`.
    pub h_v: Decomposition,
    /// `w|_{z=0} = h_w(u0)`.
    pub h_w: Decomposition,
    pub verified: bool,
}

pub fn cancel_extract_free(v: &NcPoly, w: &NcPoly, z: &str) -> Result<CancellationResult<Word>> {
    if !v.same_algebra(w) {
        return Err(Error::AlgebraMismatch);
    }
    v.alphabet().index_of(z)?;
    let anchor = anchor(v, w)?;
    if !dep_free(v, w)?.dependent {
        return Err(Error::IndependentGenerators);
    }
    let root = centralizer_root_free(anchor)?;
    finish(v, w, z, root)
}

pub fn cancel_extract_comm(v: &CPoly, w: &CPoly, z: &str) -> Result<CancellationResult<ExpVec>> {
    if !v.same_algebra(w) {
        return Err(Error::AlgebraMismatch);
    }
    v.alphabet().index_of(z)?;
    require_char_zero(v)?;
    let anchor = anchor(v, w)?;
    if !dep_comm(v, w)?.dependent {
        return Err(Error::TranscendenceDegreeTwo);
    }
    let root = centralizer_root_comm(anchor)?;
    finish(v, w, z, root)
}

/// The nonconstant input of larger degree (`v` on ties).
fn anchor<'a, M: Monomial>(v: &'a Poly<M>, w: &'a Poly<M>) -> Result<&'a Poly<M>> {
    match (v.is_constant(), w.is_constant()) {
        (true, true) => Err(Error::ConstantInput),
        (false, true) => Ok(v),
        (true, false) => Ok(w),
        (false, false) => Ok(if w.degree() > v.degree() { w } else { v }),
    }
}

fn finish<M: Monomial>(
    v: &Poly<M>,
    w: &Poly<M>,
    z: &str,
    root: RootResult<M>,
) -> Result<CancellationResult<M>> {
    let u = root.u;
    if decompose(v, &u)?.is_none() || decompose(w, &u)?.is_none() {
        return Err(Error::NotInRootAlgebra);
    }
    let split = u.z_split(z)?;
    if split.u0.is_constant() {
        return Err(Error::DegenerateU0);
    }
    let v0 = v.kill_generator(z)?;
    let w0 = w.kill_generator(z)?;
    let h_v = decompose(&v0, &split.u0)?.ok_or(Error::NotInRootAlgebra)?;
    let h_w = decompose(&w0, &split.u0)?.ok_or(Error::NotInRootAlgebra)?;
    if h_v.evaluate(&split.u0) != v0 || h_w.evaluate(&split.u0) != w0 {
        return Err(Error::InternalVerificationFailure(
            "h(u0) does not reproduce the z = 0 image".into(),
        ));
    }
    Ok(CancellationResult {
        u,
        u0: split.u0,
        u1: split.u1,
        h_v,
        h_w,
        verified: true,
    })
}
