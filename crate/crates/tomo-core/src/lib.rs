//! Decoherence from universal tomographic POVM measurements on an
//! N-dimensional quantum system.
//!
//! The environment is modelled as repeatedly performing a measurement whose
//! outcomes are the pure states themselves (a POVM with effects
//! `|psi><psi| dmu`, `dmu` the Fubini-Study volume scaled to total mass N).
//! Discarding the outcomes yields a channel with a simple closed form,
//! `rho -> (1 + rho) / (N + 1)`, whose continuous-time unravelling is a
//! Lindblad equation with all su(N) generators as jump operators. The
//! approach to classicality is tracked through the sigma-parametrised
//! Stratonovich-Weyl quasiprobability distributions on projective Hilbert
//! space.
//!
//! Module map:
//!
//! - [`su`] — generalized Gell-Mann basis of su(N), structure constants,
//!   completeness map.
//! - [`state`] — density matrices, Bloch encoding, pure states, Husimi
//!   function.
//! - [`mc`] — Haar sampling and Monte Carlo integration over projective
//!   Hilbert space (the oracle side of every closed-form claim).
//! - [`channel`] — the tomographic measurement channel: one step, k-fold
//!   iteration, MC realization, selective outcome sampling.
//! - [`quasiprob`] — Stratonovich-Weyl kernels and distributions, their
//!   extremes and the order-shift law under the channel.
//! - [`lindblad`] — the continuous-time master equation, closed-form
//!   solution, RK4 oracle, interpolation of the discrete iterates.
//! - [`classicality`] — classicality thresholds k*, t*, the effective order
//!   parameter, and figure datasets.
//!
//! Monte Carlo routines are data-parallel over fixed-size sample chunks with
//! per-chunk RNG substreams, so results are bitwise reproducible for a given
//! seed regardless of thread count. The `parallel` feature (default) backs
//! them with rayon; disabling it falls back to the sequential driver with
//! identical output.

pub mod channel;
pub mod classicality;
mod error;
pub mod lindblad;
pub mod mc;
pub mod quasiprob;
pub mod state;
pub mod su;

pub use error::{Error, Result};

/// Complex double-precision scalar.
pub type C64 = nalgebra::Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense real matrix.
pub type RMatrix = nalgebra::DMatrix<f64>;
/// Dense complex vector.
pub type CVector = nalgebra::DVector<C64>;
/// Dense real vector.
pub type RVector = nalgebra::DVector<f64>;
