//! Jones polynomials of double-twist knots, Kauffman bracket state sums,
//! root finding for `J(t) = 1` and equimodularity tools for families of
//! links built from a two-dimensional transfer matrix.

pub mod bkw;
pub mod bracket;
pub mod dtwist;
pub mod error;
pub mod laurent;
pub mod roots;

pub use error::{BkwError, DiagramError, DtwistError, PolyError, RootError};
pub use laurent::{LaurentPoly, TermOrder, Var};
