//! # lpslab
//!
//! A numerical laboratory for scale-localized convolution analysis on the
//! periodic torus: dyadic smoothing banks built from compactly supported
//! mothers, square functions and their certified almost-orthogonality
//! constants, moment-correction cascades, Carleson-measure constants of
//! dyadic mass distributions, Hardy-space quasi-norms with atom-based
//! boundedness experiments, and paraproduct decompositions.
//!
//! Everything is deterministic: runs are reproducible bit-for-bit across
//! thread counts (the `parallel` feature changes wall-clock time, never
//! results).
//!
//! ## Layout
//!
//! * [`grid`] — torus sampling, quadrature, FFT-backed circular convolution.
//! * [`kernels`] — mother functions, dyadic dilation banks, Fourier symbols.
//! * [`lpso`] — square functions and certified size/derivative/Hölder constants.
//! * [`moments`] — discrete moment tables and the correction cascade.
//! * [`carleson`] — dyadic Carleson constants and related cube scans.
//! * [`hardy`] — maximal functions, atomic `H^p` quasi-norms, boundedness
//!   experiments.
//! * [`paraproduct`] — paraproduct operators, adjoint moment diagnostics,
//!   multiplier bounds.
//! * [`lab`] — one-stop assembly of the standard desk-scale experiment bench.

pub mod error;
pub mod par;

pub mod grid;
pub mod kernels;

pub mod carleson;
pub mod hardy;
pub mod lab;
pub mod lpso;
pub mod moments;
pub mod paraproduct;

pub use error::{LabError, Result};
pub use grid::{Grid, GridFunction, MultiIndex, ScaleRange};
