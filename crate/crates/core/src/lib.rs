//! MAP reconstruction of signals and images under infinitely divisible sparse priors.
//!
//! The crate is organized around the estimation pipeline:
//!
//! * [`priors`] — Lévy exponents, numerically inverted innovation pdfs, and the
//!   potential functions they induce.
//! * [`proximal`] — scalar and vectorial proximity operators, closed-form where
//!   available and lookup-table backed otherwise.
//! * [`operators`] — matrix-free forward models (convolution, Fourier sampling,
//!   Radon) and the discrete gradient used as regularization operator.
//! * [`solvers`] — the ADMM solver with Fourier-diagonal and conjugate-gradient
//!   backends for the quadratic subproblem, plus the Gaussian → Laplace →
//!   Student warm-start chain.
//! * [`experiments`] — phantoms, sampling masks, noise injection, and metrics.
//! * [`config`], [`io`], [`cli`] — the `key = value` config format, the float
//!   grid container, and the command-line pipelines built on top.

pub mod cli;
pub mod config;
pub mod experiments;
pub mod grid;
pub mod io;
pub mod operators;
pub mod priors;
pub mod proximal;
pub mod solvers;

pub use grid::{Boundary, Dims, GradientField, GridSignal};
pub use priors::{PdfTable, Potential, PotentialTable, PriorModel};
pub use proximal::ProxTable;
