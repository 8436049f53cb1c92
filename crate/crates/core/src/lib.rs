//! Finite-type cluster algebras with universal coefficients, and their
//! categorification by Frobenius orbit categories of Nakajima configuration
//! categories.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] ADE root systems, almost positive roots, the piecewise-linear
//!   maps `tau_plus` / `tau_minus`.
//! * [`quiver`] quivers, ice quivers and Fomin-Zelevinsky mutation.
//! * [`clusteralg`] tropical semifields, Laurent polynomials, seeds, exchange
//!   graphs and coefficient specialization.
//! * [`repmod`] representations of Dynkin quivers, reflection functors.
//! * [`meshcat`] repetition quivers, mesh categories and Happel's embedding.
//! * [`nakajima`] configurations, Nakajima categories and orbit quivers.
//! * [`categorify`] cluster-tilting objects, exchange conflations and the
//!   end-to-end verification of the ice quiver identification.
//! * [`cli`] the command line front end.

pub mod categorify;
pub mod cli;
pub mod clusteralg;
pub mod error;
pub mod linalg;
pub mod meshcat;
pub mod nakajima;
pub mod quiver;
pub mod repmod;
pub mod rootsys;

pub use error::{Error, Result};
