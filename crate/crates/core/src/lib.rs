//! Exact computation of blowup-algebra invariants (Rees algebra, associated
//! graded ring, fiber cone) of homogeneous ideals over prime fields.

pub mod blowup;
pub mod determinant;
pub mod error;
pub mod field;
pub mod groebner;
pub mod harness;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{ReducedGB, SyzygyMatrix};
pub use hilbert::{HilbertSeries, LengthValue};
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use poly::{Polynomial, Term};
pub use resolution::FreeResolution;
pub use ring::{MonomialOrder, PolyRing};
