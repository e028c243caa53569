//! Exact characters of irreducible `gl(m|n)` modules.
//!
//! Characters are Laurent polynomials in `x_i = e^{ε_i}` and `y_j = e^{δ_j}`.
//! Two independent routes are provided: a Jacobi-Trudi type determinant in
//! supersymmetric complete functions ([`jacobi_trudi`]) and an alternating
//! sum over the Weyl group ([`characters`]). [`verify`] checks them against
//! each other and against the supporting symmetric-function identities.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod jacobi_trudi;
pub mod laurent;
pub mod symfunc;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use laurent::{Int, LaurentPoly};
