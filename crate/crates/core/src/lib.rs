//! Geometry of quantum state space.
//!
//! States live in a finite-dimensional complex Hilbert space; physical
//! states are rays, i.e. states modulo nonzero complex scaling. This crate
//! provides:
//!
//! * [`hilbert`]: state vectors, inner products, normalization and the
//!   projection onto rays with a canonical gauge.
//! * [`fubini_study`]: the Fubini-Study line element, discrete curve
//!   length, closed-form ray distance and great-circle interpolation.
//! * [`complex_coords`]: the complex plane coordinate `Z = x + iy`, the flat
//!   and round-sphere metrics written in it, stereographic projection and
//!   the Bloch map of two-level states.
//! * [`atlas`]: charts and atlases on the circle with numerical
//!   homeomorphism, coverage and transition checks.
//! * [`harmonics`]: the `l = 1, m = ±1` harmonics and the circular level
//!   set of `|Ψ|²`.
//! * [`geodesic_opt`]: a discrete-energy geodesic solver for the sphere
//!   metric in the stereographic chart.
//! * [`phase`]: the Bargmann/Pancharatnam phase of closed loops of states
//!   and the spherical solid angle they enclose.

pub mod atlas;
pub mod complex_coords;
pub mod error;
pub mod fubini_study;
pub mod geodesic_opt;
pub mod harmonics;
pub mod hilbert;
pub mod phase;

pub use error::{GeomError, Result};
pub use num_complex::Complex64;

pub use atlas::{Atlas, Chart};
pub use complex_coords::{ComplexPoint, PlanePoint, SpherePoint};
pub use fubini_study::DiscreteCurve;
pub use geodesic_opt::{PlanarCurve, SolverConfig};
pub use harmonics::LocusSpec;
pub use hilbert::{Ray, StateVector};
pub use phase::ClosedLoop;
