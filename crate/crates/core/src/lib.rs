//! Numerical toolkit for the linear-stability analysis of mini-batch SGD
//! around interpolation minima, and for the input-gradient (Sobolev seminorm)
//! bounds that stability implies for models with a multiplicative first layer.
//!
//! The crate is organized around the pipeline
//!
//! 1. [`model`] — small feed-forward networks `f(x, W) = f̃(W₁x, W₂)` with
//!    exact reverse-mode gradients in both parameters and inputs,
//! 2. [`train`] — a seeded SGD trainer on square loss producing interpolation
//!    solutions and sweep tables,
//! 3. [`stability`] — the batch-averaged operator `T_k = E (I - η/B Σ Hᵢ)^{⊗k}`
//!    acting on symmetric tensors, spectral-radius stability verdicts, the
//!    k = 2 closed forms, and gradient-moment bound checks,
//! 4. [`tensor`] — rank-one decomposed symmetric tensors that make applying
//!    `T_k` feasible without materializing `w^k` arrays,
//! 5. [`sobolev`] — seminorms, data-geometry probes, and the bound
//!    calculators relating stability to generalization and robustness,
//! 6. [`data`] — synthetic low-dimensional-manifold datasets and CSV I/O.

pub mod data;
pub mod error;
mod hexfloat;
pub mod model;
pub mod report;
pub mod rng;
pub mod sobolev;
pub mod stability;
pub mod tensor;
pub mod train;

pub use error::{Error, Result};
