//! WKB energy levels corrected by Stokes constants.
//!
//! The crate continues WKB solutions of `ψ'' + Q(z, E) ψ = 0` through the
//! complex plane with Heading's rules (Stokes lines, anti-Stokes lines, cuts
//! and reconnection between singular points), turns the resulting monodromy
//! into first-order corrections of the Bohr–Sommerfeld condition, and checks
//! everything against brute-force eigenvalue solvers.
//!
//! Five problem families are built in:
//!
//! | family     | `Q(z)`        | bound states |
//! |------------|---------------|--------------|
//! | `weber`    | `E - z²`      | yes          |
//! | `budden`   | `1 + c/z`     | no           |
//! | `quartic`  | `E - z⁴`      | yes          |
//! | `sextic`   | `E - z⁶`      | yes          |
//! | `pt_cubic` | `E + (iz)³`   | yes          |
//!
//! Module map:
//!
//! - [`numerics`]: adaptive quadrature, complex Gamma, bracketed roots.
//! - [`potentials`]: the family registry (turning points, action law,
//!   connection factors, real-axis profiles).
//! - [`quantization`]: WKB and phase-integral levels, Stokes-constant
//!   estimates, table assembly.
//! - [`stokes_exact`]: closed-form Stokes constants for Weber and Budden.
//! - [`connection`]: the continuation engine and its itineraries.
//! - [`geometry`]: Stokes / anti-Stokes line tracing and diagram export.
//! - [`oracle`]: finite-difference and shooting eigenvalue solvers.
//! - [`cli`]: the `phaseint` command surface.

pub mod cli;
pub mod connection;
pub mod error;
pub mod geometry;
pub mod numerics;
pub mod oracle;
pub mod potentials;
pub mod quantization;
pub mod stokes_exact;

pub use error::{Error, Result};
pub use numerics::Complex;
pub use potentials::{Family, VertexId};
