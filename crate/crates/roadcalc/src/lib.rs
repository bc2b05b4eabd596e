//! Min-plus toolkit for worst-case travel guarantees on road itineraries.
//!
//! A road section that always serves its queue at least as fast as some
//! curve `β` gives every driver a hard delay guarantee once the arriving
//! traffic is bounded by a curve `α`. This crate provides the pieces needed
//! to compute such guarantees exactly:
//!
//! * [`curve`] — eventually periodic piecewise-affine curves over exact
//!   rationals, with the min-plus operations (minimum, convolution,
//!   deconvolution, sub-additive closure) and ordering tests;
//! * [`matrix`] — small matrices of curves with min-plus product and star;
//! * [`traffic`] — service matrices of road sections built from physical
//!   parameters (free-flow/backward wave speeds, saturation flow, signal
//!   timings) and their composition along an itinerary;
//! * [`arrival`] — arrival-curve extraction from measured cumulative flows;
//! * [`bounds`] — horizontal-deviation delay bounds from arrival and
//!   service curves;
//! * [`sim`] — a discrete-time cell-based simulator used as an oracle to
//!   validate the analytic guarantees trajectory by trajectory;
//! * [`grid`] — sampled evaluation of curves on a uniform grid, shared by
//!   the simulator checks and the brute-force test oracles;
//! * [`io`] — JSON/CSV schemas for networks, arrivals, scenarios, and
//!   reports, plus the run manifest.
//!
//! Everything is exact: no floating point enters any bound.

pub mod curve;
pub mod matrix;
pub mod rat;

pub use curve::{Breakpoint, Curve, Tail};
pub use matrix::CurveMatrix;
pub use rat::{Finite, Infinite, Rat, Value};
