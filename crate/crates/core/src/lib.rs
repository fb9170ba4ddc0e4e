//! Exact symbolic computation in free associative algebras `K<x_1, ..., x_n>`
//! and polynomial rings `K[x_1, ..., x_n]` over `Q` or `GF(p)`.
//!
//! - [`dependence`]: commutator and Jacobian dependence criteria, plus a
//!   bounded annihilator search used as a cross-check.
//! - [`centralizer`]: the root `u` with `C(f) = K[u]` and decompositions
//!   `f = h(u)`.
//! - [`cancellation`]: from generators `v, w` and a designated generator
//!   `z`, the single generator `u0` of the algebra obtained by setting
//!   `z = 0`.

pub mod cancellation;
pub mod centralizer;
pub mod coeff;
pub mod cpoly;
pub mod dependence;
pub mod error;
pub mod linalg;
pub mod ncpoly;
pub mod poly;
pub mod textio;

pub use cancellation::{cancel_extract_comm, cancel_extract_free, CancellationResult};
pub use centralizer::{
    centralizer_kernel_comm, centralizer_kernel_free, centralizer_root_comm, centralizer_root_free,
    decompose, normalize, Decomposition, RootResult,
};
pub use coeff::{FieldSpec, Scalar};
pub use cpoly::{jacobian_det, CPoly, ExpVec};
pub use dependence::{
    annihilator_oracle, dep_comm, dep_free, Annihilator, DependenceVerdict, Witness,
};
pub use error::{Error, Result};
pub use linalg::{Limits, MatrixK};
pub use ncpoly::{NcPoly, Word};
pub use poly::{Alphabet, Degree, Monomial, Poly, ZSplit};
pub use textio::{Polynomial, RingMode, Session};
