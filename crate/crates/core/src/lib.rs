//! Exact computer algebra for bivariate polynomial solutions of Jacobi's
//! identity `P(P(x,y),z) + P(P(y,z),x) + P(P(z,x),y) = 0`.
//!
//! - [`rings`]: integers, prime fields and `F_p[t]`.
//! - [`poly`]: sparse multivariate polynomials, parsing and printing.
//! - [`numtheory`]: base-`p` digits and Lucas' theorem.
//! - [`jacobi`]: defect polynomials for the identity and its variants.
//! - [`classify`]: the solution families and a classifier.
//! - [`oracle`]: exhaustive enumeration used as independent ground truth.

pub mod classify;
pub mod error;
pub mod jacobi;
pub mod numtheory;
pub mod oracle;
pub mod poly;
pub mod rings;
mod serde_impls;

pub use classify::{
    classify, constant_solutions, make_family, system_check, ClassificationResult,
    ConstantSolutions, FamilyParams, SystemResiduals,
};
pub use error::{Error, Result};
pub use jacobi::{defect, satisfies, swap, EquationForm};
pub use poly::{poly_parse, Monomial, MultiPoly};
pub use rings::{Prime, RingElement, RingSpec};
