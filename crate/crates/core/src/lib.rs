//! Exact computations in the affine nilCoxeter and nilHecke algebras of type
//! `A_{n-1}`: equivariant Schubert structure constants of the affine flag
//! variety, cap and Pieri operators, marked strong strips, and strong Schur
//! functions.

pub mod affine_perm;
pub mod cache;
pub mod error;
pub mod nilcoxeter;
pub mod nilhecke;
pub mod parse;
pub mod strong;
pub mod symfunc;
pub mod weights;

pub use affine_perm::{AffinePerm, Reflection};
pub use cache::CoproductCache;
pub use error::{Error, Result};
pub use nilcoxeter::NilCoxElem;
pub use nilhecke::{NilHeckeElem, TensorElem};
pub use strong::{MarkedCover, StrongStrip, StrongTableau};
pub use symfunc::{Partition, SymFunc};
pub use weights::{SPoly, Weight};
