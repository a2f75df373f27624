//! Slow-fast analysis toolkit for elliptic bursters and torus canards.
//!
//! The crate is organised around a catalogue of slow-fast models with two
//! fast variables and one slow variable `mu` (plus the planar van der Pol
//! oscillator as the classical reference case):
//!
//! * [`ode`] — adaptive Runge-Kutta integration with dense output and
//!   event location; everything downstream builds on it.
//! * [`models`] — the model catalogue (van der Pol, canonical elliptic
//!   burster, Leidenator, Wilson-Cowan) and their singular subsystems.
//! * [`fastbif`] — fast-subsystem bifurcation structure: critical
//!   manifold, cycle branches, Hopf points and saddle-nodes of cycles.
//! * [`slowavg`] — slow and averaged-slow flows, entry-exit (way-in,
//!   way-out) maps and buffer points.
//! * [`singular`] — construction and validation of singular orbits built
//!   by concatenating slow, fast and averaged-slow segments.
//! * [`hunt`] — full-system trajectory classification and bisection for
//!   canard transition values of `k`.
//! * [`cli`] — config-file driven front end used by the `torcan` binary.

pub mod cli;
pub mod fastbif;
pub mod hunt;
pub mod models;
pub mod num;
pub mod ode;
pub mod singular;
pub mod slowavg;

pub use models::{Form, Model, ModelSpec, ParamSet, Subsystem};
pub use ode::{IntegratorConfig, Trajectory};
