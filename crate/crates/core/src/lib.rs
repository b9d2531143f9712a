//! Exact computer algebra for the Krichever map on moduli of pointed
//! (possibly singular, irreducible) curves.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactalg`]: rationals, sparse weighted-graded polynomials, polynomial
//!   determinants and exact rank.
//! * [`semigroups`]: numerical semigroups, Weierstrass / Schubert index
//!   sequences and the partitions attached to them.
//! * [`schur`]: factorial, shifted and double Schur polynomials and the
//!   `Ψ` / `Ψ′` row determinants.
//! * [`pullback`]: pullbacks of equivariant Schubert classes and power sums,
//!   the λ-basis, Mumford's relation and the Bernoulli form of odd power sums.
//! * [`wcycles`]: Weierstrass cycle classes and their pushforwards.
//! * [`tautring`]: relation ideals, localization at monomial curves and
//!   Hilbert-function bounds for the tautological ring.

pub mod error;
pub mod exactalg;
pub mod pullback;
pub mod schur;
pub mod semigroups;
pub mod tautring;
pub mod wcycles;

pub use error::{Error, Result};
pub use exactalg::{Family, Monomial, MultiPoly, PolyMatrix, Rational, Variable};
pub use semigroups::{IndexSequence, NumericalSemigroup, Partition};
