//! Exact computation with R-matrices, quantum and braided groups, braided
//! planes, finite-dimensional quasitriangular Hopf algebras and the
//! transmutation and bosonization constructions relating them.

pub mod bmatrix;
pub mod braided;
pub mod error;
pub mod findim_hopf;
pub mod frt;
pub mod linalg;
pub mod ncalg;
pub mod planes;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod transmute;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use report::{Check, VerificationReport};
pub use rmatrix::RMatrix;
pub use scalar::{Mode, Scalar, ScalarError};
