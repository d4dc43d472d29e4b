//! Exact enumeration of staircase (cyclic) words and machine verification of
//! the Chebyshev-polynomial closed forms behind their generating functions.
//!
//! Everything is computed over arbitrary-precision rationals: polynomial and
//! rational-function arithmetic, Chebyshev recurrences, transfer-matrix word
//! counting, and the linear-algebra identities (Sherman-Morrison, closed-form
//! tridiagonal inverses) that tie the counting to the closed forms. There is
//! no floating point anywhere; every check is an exact identity.

pub mod bipoly;
pub mod chebyshev;
pub mod error;
pub mod genfunc;
pub mod matrixverify;
pub mod poly;
pub mod qsums;
pub mod rational;
pub mod ratfunc;
pub mod report;
pub mod series;
pub mod wordstats;

pub use bipoly::BiPoly;
pub use error::{Error, Result};
pub use poly::{Poly, Var};
pub use rational::Rational;
pub use ratfunc::RatFunc;
pub use series::BiSeries;
