//! Desk-scale analysis of higher-rank actions by toral automorphisms.
//!
//! The crate combines two layers:
//!
//! * an exact layer (`intmat`, `intpoly`, `action`) working over
//!   arbitrary-precision integers: GL(N,Z) arithmetic, characteristic
//!   polynomials, cyclotomic tests, commutator calculus;
//! * a numerical layer (`spectral`, `orbits`, `fourier`, `cohomology`,
//!   `kam`) for the dual-orbit Fourier analysis behind twisted
//!   coboundary equations and the iterative conjugacy scheme.
//!
//! `search` builds the concrete example families (block actions with
//! square-zero unipotents, reciprocal-polynomial companion matrices) and
//! `io` pins down the serialized formats used by the CLI.

pub mod action;
pub mod cohomology;
pub mod error;
pub mod fourier;
pub mod intmat;
pub mod intpoly;
pub mod io;
pub mod kam;
pub mod orbits;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use intmat::IntMatrix;
pub use intpoly::IntPolynomial;
