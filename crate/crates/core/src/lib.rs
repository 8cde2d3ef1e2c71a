//! Exact Hall-Littlewood P-polynomials for `GL_n`.

pub mod affine;
pub mod cli;
pub mod error;
pub mod hall_littlewood;
pub mod hecke;
pub mod laurent;
pub mod perm;
pub mod psi;
pub mod sympoly;
pub mod tableau;

pub use affine::AffineElement;
pub use error::{Error, Result};
pub use hall_littlewood::{HLExpansion, Route};
pub use hecke::{HeckeElement, Subgroup};
pub use laurent::LaurentPoly;
pub use perm::{Permutation, Weight};
pub use sympoly::SymPoly;
pub use tableau::{Column, Filling, Partition};
