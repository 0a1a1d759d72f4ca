//! Exact invariants of numerical semigroups with up to three generators.
//!
//! Given pairwise-validated generators `d1 < d2 < d3`, the crate computes
//! the largest non-representable integer F, the number of gaps G, the
//! matrix of minimal relations with its discriminant root J, and the
//! numerator polynomial Q of the generating function, all in exact
//! integer arithmetic. A brute-force dynamic-programming oracle backs
//! every closed form, and a small floating-point layer cross-checks the
//! series constructions by contour quadrature.
//!
//! Entry points:
//! - [`semigroup::Generators::validate`] checks a raw tuple.
//! - [`frobenius::invariants`] computes F, G, J, Q, and the relation
//!   matrix for a three-generator tuple.
//! - [`frobenius::frobenius_genus`] dispatches one, two, and three
//!   generators uniformly.
//! - [`oracle`] holds the independent table-based reference
//!   implementation used by the test suites.
//!
//! ```
//! use frobenius3::semigroup::Generators;
//! use frobenius3::frobenius::invariants;
//!
//! let gens = Generators::validate(&[23, 29, 44]).unwrap();
//! let inv = invariants(&gens).unwrap();
//! assert_eq!(inv.f, 239);
//! assert_eq!(inv.g, 122);
//! assert_eq!(inv.j, Some(86));
//! ```

pub mod error;
pub mod frobenius;
pub mod johnson;
pub mod oracle;
pub mod semigroup;
pub mod series;

pub use error::{Error, Result};
pub use frobenius::{frobenius_genus, gap_generating_function, hilbert_series, invariants, Invariants3};
pub use johnson::{DiagonalTriple, JohnsonMatrix};
pub use semigroup::{Extent, Generators};
pub use series::SparseSeries;
