//! Exact-arithmetic library for Ehrhart coefficients of lattice polytopes,
//! symplectic Hecke operators acting on them, and the associated local and
//! global zeta functions.
//!
//! Everything here is exact: rational arithmetic is arbitrary precision,
//! polynomial identities are verified symbolically, and every closed-form
//! count ships with a brute-force enumeration oracle at desk scale.
//!
//! Module map:
//! - [`exact`]: rationals, Laurent polynomials, bivariate rational functions
//!   in `(q, t)`, truncated power series in `t`.
//! - [`qcombinat`]: partitions, q-binomials, the cover-poset polynomials
//!   `Psi`/`Theta`, permutation statistics, Igusa functions, and symmetric
//!   matrix counts over finite fields.
//! - [`lattice`]: integer matrix normal forms, sublattice/superlattice and
//!   symplectic coset enumeration, Smith types and Hermite compositions.
//! - [`ehrhart`]: lattice polytopes, exact point counting with respect to
//!   rational superlattices, Ehrhart polynomials, Hecke actions.
//! - [`zeta`]: eigenvalue polynomials of types A and C, local zeta functions
//!   in closed form, and the symbolic identity suites.
//! - [`analytics`]: global Dirichlet coefficients, abscissas of convergence,
//!   certified asymptotic constants.

pub mod analytics;
pub mod ehrhart;
pub mod exact;
pub mod lattice;
pub mod qcombinat;
pub mod zeta;

pub use exact::{BigRational, BivariatePoly, LaurentPoly, RationalFunctionQT, TruncatedSeries};
pub use qcombinat::Partition;
