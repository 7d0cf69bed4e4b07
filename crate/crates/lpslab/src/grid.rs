//! Sampled-function arithmetic on the periodic unit torus: quadrature,
//! circular convolution, and `L^p` quasi-norms.
//!
//! # Conventions
//!
//! * The domain is the torus `[0,1)^n`, `n ∈ {1,2}`, sampled at `2^G`
//!   points per axis with spacing `h = 2^{-G}`.
//! * Grid index `i` on an axis corresponds to the coordinate `i·h`; the
//!   **signed representative** of that coordinate is `i·h` when
//!   `i·h ≤ 1/2` and `i·h − 1` otherwise, so positions handed to
//!   evaluators lie in `(-1/2, 1/2]` per axis and compactly supported
//!   mothers centred at the origin are sampled naturally.
//! * In two dimensions storage is row-major with the second coordinate
//!   outer: `index = i_1 · 2^G + i_0`.
//! * Quadrature is the rectangle rule, which on the torus coincides with
//!   the trapezoid rule and is spectrally accurate for smooth periodic
//!   integrands.

use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{LabError, Result};
use crate::par::maybe_par_map;

// ---------------------------------------------------------------------------
// MultiIndex
// ---------------------------------------------------------------------------

/// A multi-index `α ∈ ℕ₀ⁿ`, with `n` the grid dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    comps: Vec<u32>,
}

impl MultiIndex {
    /// Build from explicit components.
    pub fn new(comps: Vec<u32>) -> Self {
        MultiIndex { comps }
    }

    /// One-dimensional index.
    pub fn d1(a: u32) -> Self {
        MultiIndex { comps: vec![a] }
    }

    /// Two-dimensional index.
    pub fn d2(a: u32, b: u32) -> Self {
        MultiIndex { comps: vec![a, b] }
    }

    /// Zero index of the given dimension.
    pub fn zero(dim: usize) -> Self {
        MultiIndex {
            comps: vec![0; dim],
        }
    }

    /// Components.
    pub fn comps(&self) -> &[u32] {
        &self.comps
    }

    /// Dimension (number of components).
    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    /// Order `|α| = α_1 + … + α_n`.
    pub fn order(&self) -> u32 {
        self.comps.iter().sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &MultiIndex) -> bool {
        self.comps.len() == other.comps.len()
            && self.comps.iter().zip(&other.comps).all(|(a, b)| a <= b)
    }

    /// Componentwise difference `self − other` (requires `other ≤ self`).
    pub fn sub(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert!(other.leq(self));
        MultiIndex {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `α! = Π α_c!` as a float (exact for the small orders in play).
    pub fn factorial(&self) -> f64 {
        self.comps.iter().map(|&a| fact_u(a)).product()
    }

    /// Falling-factorial ratio `β!/(β−α)!` for `α = other ≤ β = self`.
    pub fn falling_ratio(&self, other: &MultiIndex) -> f64 {
        debug_assert!(other.leq(self));
        self.comps
            .iter()
            .zip(&other.comps)
            .map(|(&b, &a)| ((b - a + 1)..=b).map(|v| v as f64).product::<f64>())
            .product()
    }

    /// Multidimensional binomial coefficient `C(self, other)`, exact
    /// integer arithmetic.
    pub fn binomial(&self, other: &MultiIndex) -> f64 {
        debug_assert!(other.leq(self));
        self.comps
            .iter()
            .zip(&other.comps)
            .map(|(&a, &m)| binom_u(a, m))
            .product::<u128>() as f64
    }

    /// Monomial `pos^α = Π pos_c^{α_c}`.
    pub fn pow(&self, pos: &[f64]) -> f64 {
        self.comps
            .iter()
            .zip(pos)
            .map(|(&a, &x)| x.powi(a as i32))
            .product()
    }

    /// All multi-indices of dimension `dim` with order ≤ `max_order`,
    /// sorted by (order, components) — a deterministic enumeration.
    pub fn enumerate(dim: usize, max_order: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        match dim {
            1 => {
                for a in 0..=max_order {
                    out.push(MultiIndex::d1(a));
                }
            }
            2 => {
                for order in 0..=max_order {
                    for a in (0..=order).rev() {
                        out.push(MultiIndex::d2(a, order - a));
                    }
                }
                out.sort_by_key(|m| (m.order(), m.comps.clone()));
            }
            _ => panic!("dimension {dim} unsupported"),
        }
        out
    }

    /// All `μ ≤ self` componentwise, deterministic order.
    pub fn all_leq(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::zero(self.dim())];
        for (c, &amax) in self.comps.iter().enumerate() {
            let mut next = Vec::new();
            for base in &out {
                for v in 0..=amax {
                    let mut comps = base.comps.clone();
                    comps[c] = v;
                    next.push(MultiIndex { comps });
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", strs.join(" "))
    }
}

fn fact_u(a: u32) -> f64 {
    (1..=a as u64).map(|v| v as f64).product()
}

fn binom_u(n: u32, k: u32) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

// ---------------------------------------------------------------------------
// Grid
// ---------------------------------------------------------------------------

/// The sampling lattice of the periodic unit torus `[0,1)^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    dim: usize,
    log2_points: u32,
}

impl Grid {
    /// A `dim`-dimensional grid with `2^log2_points` samples per axis.
    pub fn new(dim: usize, log2_points: u32) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(LabError::pre(format!("grid dim must be 1 or 2, got {dim}")));
        }
        if log2_points < 6 {
            return Err(LabError::pre(format!(
                "grid log2_points must be >= 6, got {log2_points}"
            )));
        }
        if (log2_points as usize) * dim > 26 {
            return Err(LabError::pre(format!(
                "grid of 2^{} points per axis in {dim}D exceeds the desk-scale budget",
                log2_points
            )));
        }
        Ok(Grid { dim, log2_points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn log2_points(&self) -> u32 {
        self.log2_points
    }

    /// Samples per axis, `2^G`.
    pub fn points_per_axis(&self) -> usize {
        1usize << self.log2_points
    }

    /// Total sample count `(2^G)^n`.
    pub fn len(&self) -> usize {
        self.points_per_axis().pow(self.dim as u32)
    }

    /// Grid spacing `h = 2^{-G}` (exact: `h · 2^G = 1`).
    pub fn h(&self) -> f64 {
        1.0 / self.points_per_axis() as f64
    }

    /// Quadrature cell volume `h^n`.
    pub fn cell_volume(&self) -> f64 {
        self.h().powi(self.dim as i32)
    }

    /// Signed representative of axis index `i`: `i·h` mapped to `(-1/2, 1/2]`.
    pub fn rep_axis(&self, i: usize) -> f64 {
        let p = self.points_per_axis();
        debug_assert!(i < p);
        if 2 * i > p {
            (i as f64 - p as f64) * self.h()
        } else {
            i as f64 * self.h()
        }
    }

    /// Decompose a flat index into per-axis indices (`[i0, i1]`; `i1 = 0` in 1D).
    pub fn split_index(&self, idx: usize) -> [usize; 2] {
        let p = self.points_per_axis();
        if self.dim == 1 {
            [idx, 0]
        } else {
            [idx % p, idx / p]
        }
    }

    /// Flat index from per-axis indices.
    pub fn flat_index(&self, axes: [usize; 2]) -> usize {
        if self.dim == 1 {
            axes[0]
        } else {
            axes[1] * self.points_per_axis() + axes[0]
        }
    }

    /// Signed-representative position of a flat index; returns the valid
    /// prefix of length `dim`.
    pub fn position(&self, idx: usize, out: &mut [f64; 2]) {
        let ax = self.split_index(idx);
        out[0] = self.rep_axis(ax[0]);
        if self.dim == 2 {
            out[1] = self.rep_axis(ax[1]);
        }
    }

    /// Euclidean torus distance from the point at flat index `idx` to 0.
    pub fn torus_norm(&self, idx: usize) -> f64 {
        let mut pos = [0.0; 2];
        self.position(idx, &mut pos);
        if self.dim == 1 {
            pos[0].abs()
        } else {
            (pos[0] * pos[0] + pos[1] * pos[1]).sqrt()
        }
    }

    /// Torus distance between two real positions given per-axis (wraps each
    /// coordinate difference to `[-1/2, 1/2]`).
    pub fn torus_dist(&self, a: &[f64], b: &[f64]) -> f64 {
        let mut acc = 0.0;
        for c in 0..self.dim {
            let mut d = (a[c] - b[c]).rem_euclid(1.0);
            if d > 0.5 {
                d -= 1.0;
            }
            acc += d * d;
        }
        acc.sqrt()
    }
}

// ---------------------------------------------------------------------------
// ScaleRange
// ---------------------------------------------------------------------------

/// A truncated range of dyadic scales `k_min ..= k_max`.
///
/// The resolvability invariant `k_max ≤ G − 4` (at least 16 samples across
/// the finest kernel width) is enforced wherever a range is coupled to a
/// grid — bank tabulation and family construction — via
/// [`ScaleRange::validate_for_grid`]. Ranges used only for analytic symbol
/// sums (no tabulation) may exceed it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaleRange {
    pub k_min: i32,
    pub k_max: i32,
}

impl ScaleRange {
    pub fn new(k_min: i32, k_max: i32) -> Result<Self> {
        if k_min > k_max {
            return Err(LabError::pre(format!(
                "scale range requires k_min <= k_max, got [{k_min}, {k_max}]"
            )));
        }
        Ok(ScaleRange { k_min, k_max })
    }

    /// Enforce the grid-resolvability invariant `k_max ≤ G − 4`.
    pub fn validate_for_grid(&self, grid: &Grid) -> Result<()> {
        let limit = grid.log2_points() as i32 - 4;
        if self.k_max > limit {
            return Err(LabError::pre(format!(
                "scale range [{}, {}] not resolvable on a 2^{} grid: k_max must be <= {}",
                self.k_min,
                self.k_max,
                grid.log2_points(),
                limit
            )));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        (self.k_max - self.k_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, k: i32) -> bool {
        self.k_min <= k && k <= self.k_max
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> {
        self.k_min..=self.k_max
    }

    /// Offset of scale `k` inside the range (for table indexing).
    pub fn offset(&self, k: i32) -> Result<usize> {
        if !self.contains(k) {
            return Err(LabError::ScaleOutOfRange {
                k,
                k_min: self.k_min,
                k_max: self.k_max,
            });
        }
        Ok((k - self.k_min) as usize)
    }

    /// Range widened by `by` scales on each side (for stability probes).
    pub fn widened(&self, by: i32) -> ScaleRange {
        ScaleRange {
            k_min: self.k_min - by,
            k_max: self.k_max + by,
        }
    }
}

// ---------------------------------------------------------------------------
// GridFunction
// ---------------------------------------------------------------------------

/// A sampled real-valued function on a [`Grid`]; immutable after
/// construction.
#[derive(Clone, Debug)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFunction {
    /// Wrap raw samples, validating count and finiteness.
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(LabError::pre(format!(
                "sample count {} does not match grid size {}",
                values.len(),
                grid.len()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(LabError::NonFinite {
                    index: i,
                    context: format!("value {v}"),
                });
            }
        }
        Ok(GridFunction { grid, values })
    }

    /// Internal constructor for values already known finite.
    pub(crate) fn from_values_unchecked(grid: Grid, values: Vec<f64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        GridFunction { grid, values }
    }

    pub fn zeros(grid: Grid) -> Self {
        GridFunction {
            values: vec![0.0; grid.len()],
            grid,
        }
    }

    pub fn constant(grid: Grid, c: f64) -> Self {
        GridFunction {
            values: vec![c; grid.len()],
            grid,
        }
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `h^n · Σ values` — the rectangle-rule integral.
    pub fn integral(&self) -> f64 {
        self.grid.cell_volume() * self.values.iter().sum::<f64>()
    }

    /// Max of |values|.
    pub fn linf(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// `(h^n Σ |f|^p)^{1/p}` for `p > 0` (a quasi-norm when `p < 1`).
    pub fn lp_quasinorm(&self, p: f64) -> Result<f64> {
        if !(p > 0.0) {
            return Err(LabError::pre(format!("lp_quasinorm requires p > 0, got {p}")));
        }
        let sum: f64 = if p == 2.0 {
            self.values.iter().map(|v| v * v).sum()
        } else if p == 1.0 {
            self.values.iter().map(|v| v.abs()).sum()
        } else {
            self.values.iter().map(|v| v.abs().powf(p)).sum()
        };
        Ok((self.grid.cell_volume() * sum).powf(1.0 / p))
    }

    /// `L²` inner product `h^n Σ f·g`.
    pub fn dot(&self, other: &GridFunction) -> Result<f64> {
        self.check_same_grid(other, "dot")?;
        Ok(self.grid.cell_volume()
            * self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .sum::<f64>())
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction {
            grid: self.grid,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn scaled(&self, c: f64) -> GridFunction {
        self.map(|v| c * v)
    }

    pub fn add(&self, other: &GridFunction) -> Result<GridFunction> {
        self.zip(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &GridFunction) -> Result<GridFunction> {
        self.zip(other, "sub", |a, b| a - b)
    }

    /// Pointwise product.
    pub fn mul_pointwise(&self, other: &GridFunction) -> Result<GridFunction> {
        self.zip(other, "mul_pointwise", |a, b| a * b)
    }

    fn zip(
        &self,
        other: &GridFunction,
        op: &str,
        f: impl Fn(f64, f64) -> f64,
    ) -> Result<GridFunction> {
        self.check_same_grid(other, op)?;
        Ok(GridFunction {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub(crate) fn check_same_grid(&self, other: &GridFunction, op: &str) -> Result<()> {
        if self.grid != other.grid {
            return Err(LabError::GridMismatch(format!(
                "{op}: {:?} vs {:?}",
                self.grid, other.grid
            )));
        }
        Ok(())
    }

    /// Cyclic translation by whole grid cells per axis:
    /// `out(x) = self(x − shift·h)`.
    pub fn translated(&self, shift: &[i64]) -> GridFunction {
        let p = self.grid.points_per_axis() as i64;
        let n = self.grid.len();
        let mut out = vec![0.0; n];
        match self.grid.dim() {
            1 => {
                let s = shift[0].rem_euclid(p) as usize;
                for i in 0..n {
                    out[(i + s) % n] = self.values[i];
                }
            }
            2 => {
                let sx = shift[0].rem_euclid(p) as usize;
                let sy = shift.get(1).copied().unwrap_or(0).rem_euclid(p) as usize;
                let pp = p as usize;
                for iy in 0..pp {
                    for ix in 0..pp {
                        let jy = (iy + sy) % pp;
                        let jx = (ix + sx) % pp;
                        out[jy * pp + jx] = self.values[iy * pp + ix];
                    }
                }
            }
            _ => unreachable!(),
        }
        GridFunction {
            grid: self.grid,
            values: out,
        }
    }

    /// Forward DFT of the samples (unnormalized,
    /// `F[m] = Σ_j f_j e^{-2πi m·j/P}`), row-major in 2D.
    pub fn spectrum(&self) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        dft_in_place(&self.grid, &mut buf, false);
        buf
    }

    /// Real part of the normalized inverse DFT of `spec`.
    pub fn from_spectrum(grid: Grid, spec: &[Complex64]) -> Result<GridFunction> {
        if spec.len() != grid.len() {
            return Err(LabError::pre(format!(
                "spectrum length {} does not match grid size {}",
                spec.len(),
                grid.len()
            )));
        }
        let mut buf = spec.to_vec();
        dft_in_place(&grid, &mut buf, true);
        let scale = 1.0 / grid.len() as f64;
        GridFunction::new(grid, buf.iter().map(|c| c.re * scale).collect())
    }
}

// ---------------------------------------------------------------------------
// FFT plumbing
// ---------------------------------------------------------------------------

fn planner() -> &'static Mutex<FftPlanner<f64>> {
    static PLANNER: OnceLock<Mutex<FftPlanner<f64>>> = OnceLock::new();
    PLANNER.get_or_init(|| Mutex::new(FftPlanner::new()))
}

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    let mut pl = planner().lock().expect("fft planner poisoned");
    if inverse {
        pl.plan_fft_inverse(len)
    } else {
        pl.plan_fft_forward(len)
    }
}

/// In-place DFT along every axis of the (possibly 2D) buffer.
fn dft_in_place(grid: &Grid, buf: &mut [Complex64], inverse: bool) {
    let p = grid.points_per_axis();
    let fft = plan(p, inverse);
    match grid.dim() {
        1 => fft.process(buf),
        2 => {
            // Rows (contiguous), then columns via gather/scatter.
            for row in buf.chunks_exact_mut(p) {
                fft.process(row);
            }
            let mut col = vec![Complex64::new(0.0, 0.0); p];
            for x in 0..p {
                for y in 0..p {
                    col[y] = buf[y * p + x];
                }
                fft.process(&mut col);
                for y in 0..p {
                    buf[y * p + x] = col[y];
                }
            }
        }
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Module operations
// ---------------------------------------------------------------------------

/// Sample `evaluator` at every grid point (signed-representative
/// coordinates) and return the sampled function together with its
/// rectangle-rule integral `h^n Σ values`.
pub fn sample_and_integrate<F>(evaluator: F, grid: Grid) -> Result<(GridFunction, f64)>
where
    F: Fn(&[f64]) -> f64 + Sync + Send,
{
    let n = grid.len();
    let dim = grid.dim();
    let values = maybe_par_map(n, n >= 1 << 14, |idx| {
        let mut pos = [0.0; 2];
        grid.position(idx, &mut pos);
        evaluator(&pos[..dim])
    });
    for (i, v) in values.iter().enumerate() {
        if !v.is_finite() {
            let mut pos = [0.0; 2];
            grid.position(i, &mut pos);
            return Err(LabError::NonFinite {
                index: i,
                context: format!("evaluator returned {v} at position {:?}", &pos[..dim]),
            });
        }
    }
    let f = GridFunction::from_values_unchecked(grid, values);
    let integral = f.integral();
    Ok((f, integral))
}

/// Circular (periodic) convolution via the spectral identity:
/// `(f∗g)(x_i) = h^n Σ_j f(x_j) g(x_i − x_j)`.
pub fn circular_convolve(f: &GridFunction, g: &GridFunction) -> Result<GridFunction> {
    f.check_same_grid(g, "circular_convolve")?;
    let mut fs = f.spectrum();
    let gs = g.spectrum();
    for (a, b) in fs.iter_mut().zip(&gs) {
        *a *= *b;
    }
    let grid = f.grid();
    let vol = grid.cell_volume();
    let mut out = GridFunction::from_spectrum(grid, &fs)?;
    for v in &mut out.values {
        *v *= vol;
    }
    Ok(out)
}

/// Direct `O(N²)` summation oracle for [`circular_convolve`] (test use;
/// cost grows quadratically with the grid size).
pub fn direct_circular_convolve(f: &GridFunction, g: &GridFunction) -> Result<GridFunction> {
    f.check_same_grid(g, "direct_circular_convolve")?;
    let grid = f.grid();
    let p = grid.points_per_axis();
    let vol = grid.cell_volume();
    let fv = f.values();
    let gv = g.values();
    let values = match grid.dim() {
        1 => maybe_par_map(p, p >= 512, |i| {
            let mut acc = 0.0;
            for j in 0..p {
                acc += fv[j] * gv[(i + p - j) % p];
            }
            acc * vol
        }),
        2 => maybe_par_map(p * p, true, |idx| {
            let (iy, ix) = (idx / p, idx % p);
            let mut acc = 0.0;
            for jy in 0..p {
                let wy = (iy + p - jy) % p;
                for jx in 0..p {
                    acc += fv[jy * p + jx] * gv[wy * p + (ix + p - jx) % p];
                }
            }
            acc * vol
        }),
        _ => unreachable!(),
    };
    Ok(GridFunction::from_values_unchecked(grid, values))
}

/// Convolve `f` (given by its spectrum) with a fixed kernel spectrum and
/// return `h^n`-normalized samples. Shared fast path for banks.
pub(crate) fn convolve_spectra(
    grid: Grid,
    kernel_spectrum: &[Complex64],
    f_spectrum: &[Complex64],
) -> GridFunction {
    let mut prod: Vec<Complex64> = kernel_spectrum
        .iter()
        .zip(f_spectrum)
        .map(|(a, b)| a * b)
        .collect();
    dft_in_place(&grid, &mut prod, true);
    let scale = grid.cell_volume() / grid.len() as f64;
    GridFunction::from_values_unchecked(grid, prod.iter().map(|c| c.re * scale).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1(log2: u32) -> Grid {
        Grid::new(1, log2).unwrap()
    }

    #[test]
    fn grid_invariants() {
        let g = g1(8);
        assert_eq!(g.points_per_axis(), 256);
        assert_eq!(g.h() * 256.0, 1.0); // h·2^G = 1 exactly
        assert!(Grid::new(3, 8).is_err());
        assert!(Grid::new(1, 5).is_err());
        // signed representative convention
        assert_eq!(g.rep_axis(0), 0.0);
        assert_eq!(g.rep_axis(128), 0.5);
        assert!(g.rep_axis(255) < 0.0);
    }

    #[test]
    fn scale_range_resolvability() {
        let g = g1(8);
        let r = ScaleRange::new(0, 4).unwrap();
        assert!(r.validate_for_grid(&g).is_ok());
        let r = ScaleRange::new(0, 5).unwrap();
        assert!(r.validate_for_grid(&g).is_err());
        assert!(ScaleRange::new(3, 1).is_err());
    }

    #[test]
    fn quadrature_trig_exactness() {
        // Exact (to 1e-12) for trigonometric polynomials of degree < 2^{G-1}.
        let g = g1(6);
        for m in [1usize, 7, 31] {
            let (_, int) = sample_and_integrate(
                |x| 0.7 + (2.0 * std::f64::consts::PI * m as f64 * x[0]).cos(),
                g,
            )
            .unwrap();
            assert!((int - 0.7).abs() < 1e-12, "m={m}: {int}");
        }
    }

    #[test]
    fn convolution_identity_and_commutativity() {
        let g = g1(7);
        let p = g.points_per_axis();
        let (f, _) =
            sample_and_integrate(|x| (2.0 * std::f64::consts::PI * x[0]).sin() + 0.3, g).unwrap();
        // discrete delta of unit mass: value 1/h at index 0
        let mut dv = vec![0.0; p];
        dv[0] = 1.0 / g.h();
        let delta = GridFunction::new(g, dv).unwrap();
        let conv = circular_convolve(&f, &delta).unwrap();
        for (a, b) in conv.values().iter().zip(f.values()) {
            assert!((a - b).abs() < 1e-12);
        }
        let (w, _) = sample_and_integrate(|x| (-(x[0] * 8.0).powi(2)).exp(), g).unwrap();
        let fg = circular_convolve(&f, &w).unwrap();
        let gf = circular_convolve(&w, &f).unwrap();
        for (a, b) in fg.values().iter().zip(gf.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn convolution_direct_oracle_2_8() {
        let g = g1(8);
        let (f, _) = sample_and_integrate(
            |x| (2.0 * std::f64::consts::PI * 3.0 * x[0]).cos() + 0.2 * (17.0 * x[0]).sin(),
            g,
        )
        .unwrap();
        let (w, _) = sample_and_integrate(|x| (-(x[0] * 6.0).powi(2)).exp() * x[0].cos(), g).unwrap();
        let a = circular_convolve(&f, &w).unwrap();
        let b = direct_circular_convolve(&f, &w).unwrap();
        let mut worst = 0.0f64;
        for (x, y) in a.values().iter().zip(b.values()) {
            worst = worst.max((x - y).abs());
        }
        assert!(worst < 1e-10, "spectral vs direct: {worst}");
    }

    #[test]
    fn convolution_2d_matches_direct() {
        let g = Grid::new(2, 6).unwrap();
        let (f, _) = sample_and_integrate(
            |x| (2.0 * std::f64::consts::PI * x[0]).cos() + x[1],
            g,
        )
        .unwrap();
        let (w, _) = sample_and_integrate(
            |x| (-(x[0] * 5.0).powi(2) - (x[1] * 5.0).powi(2)).exp(),
            g,
        )
        .unwrap();
        let a = circular_convolve(&f, &w).unwrap();
        let b = direct_circular_convolve(&f, &w).unwrap();
        let mut worst = 0.0f64;
        for (x, y) in a.values().iter().zip(b.values()) {
            worst = worst.max((x - y).abs());
        }
        assert!(worst < 1e-10, "2D spectral vs direct: {worst}");
    }

    #[test]
    fn lp_quasinorm_basics() {
        let g = g1(7);
        let c = GridFunction::constant(g, 2.5);
        for p in [0.45, 0.8, 1.0, 2.0] {
            assert!((c.lp_quasinorm(p).unwrap() - 2.5).abs() < 1e-12);
        }
        // indicator of half the torus, p = 1 -> 1/2
        let p_axis = g.points_per_axis();
        let ind = GridFunction::new(
            g,
            (0..p_axis).map(|i| if i < p_axis / 2 { 1.0 } else { 0.0 }).collect(),
        )
        .unwrap();
        assert!((ind.lp_quasinorm(1.0).unwrap() - 0.5).abs() < 1e-12);
        // homogeneity
        let f = ind.scaled(1.0).add(&c).unwrap();
        for p in [0.45, 1.0, 2.0] {
            let n1 = f.scaled(2.0).lp_quasinorm(p).unwrap();
            let n2 = 2.0 * f.lp_quasinorm(p).unwrap();
            assert!((n1 - n2).abs() < 1e-12 * n2.max(1.0));
        }
        assert!(f.lp_quasinorm(0.0).is_err());
        assert!(f.lp_quasinorm(-1.0).is_err());
    }

    #[test]
    fn lp_monotone_under_domination() {
        let g = g1(6);
        let (f, _) = sample_and_integrate(|x| (13.0 * x[0]).sin(), g).unwrap();
        let dominating = f.map(|v| v.abs() + 0.1);
        for p in [0.5, 1.0, 2.0] {
            assert!(f.lp_quasinorm(p).unwrap() <= dominating.lp_quasinorm(p).unwrap());
        }
    }

    #[test]
    fn translation_equivariance() {
        let g = g1(7);
        let (f, _) = sample_and_integrate(|x| (11.0 * x[0]).cos() + 0.4 * (5.0 * x[0]).sin(), g)
            .unwrap();
        let (w, _) = sample_and_integrate(|x| (-(x[0] * 9.0).powi(2)).exp(), g).unwrap();
        let conv_then_shift = circular_convolve(&f, &w).unwrap().translated(&[17]);
        let shift_then_conv = circular_convolve(&f.translated(&[17]), &w).unwrap();
        for (a, b) in conv_then_shift.values().iter().zip(shift_then_conv.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn nonfinite_sample_rejected() {
        let g = g1(6);
        let r = sample_and_integrate(|x| 1.0 / x[0], g); // infinite at x = 0
        assert!(matches!(r, Err(LabError::NonFinite { index: 0, .. })));
    }

    #[test]
    fn multi_index_algebra() {
        let a = MultiIndex::d2(2, 1);
        let b = MultiIndex::d2(3, 1);
        assert!(a.leq(&b));
        assert!(!b.leq(&a));
        assert_eq!(a.order(), 3);
        assert_eq!(a.factorial(), 2.0);
        assert_eq!(b.binomial(&a), 3.0);
        assert_eq!(MultiIndex::enumerate(1, 3).len(), 4);
        assert_eq!(MultiIndex::enumerate(2, 2).len(), 6);
        assert_eq!(a.all_leq().len(), 6);
        // falling ratio β!/(β−α)! for β=(3,1), α=(2,1): 3·2·1 = 6
        assert_eq!(b.falling_ratio(&a), 6.0);
    }
}
