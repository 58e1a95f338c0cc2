//! Density matrices over labelled subsystem products.
//!
//! A [`DensityMatrix`] is a dense square complex matrix together with the
//! ordered list of subsystem dimensions it factors over (here `[2, 4, 4]`
//! for Alice (x) wedge I (x) wedge II, or reductions of it) and per-subsystem
//! basis labels. Row/column indices decompose mixed-radix with the first
//! subsystem slowest, matching the canonical ket ordering of
//! [`crate::fock`].
//!
//! Besides construction from pure states, the module provides the partial
//! trace, the partial transpose (whose negative eigenvalues witness
//! entanglement), and a self-contained cyclic Jacobi eigensolver for
//! Hermitian matrices — the dimensions here are tiny (at most 32), so a
//! dependency-free solver whose residuals the tests can interrogate beats a
//! general-purpose LAPACK binding.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_complex::Complex64;

use crate::flt;
use crate::fock::Ket;

/// Default convergence threshold on the off-diagonal Frobenius norm.
pub const DEFAULT_EIG_TOL: f64 = 1e-13;

/// Hard cap on Jacobi sweeps; convergence is quadratic, so hitting this
/// signals a malformed input rather than a hard eigenproblem.
pub const MAX_JACOBI_SWEEPS: usize = 100;

/// Maximum tolerated deviation from Hermitian symmetry on solver input.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Eigenvalues below this are positive-semidefiniteness violations;
/// anything in `[PSD_FLOOR, 0)` is numerical noise.
pub const PSD_FLOOR: f64 = -1e-10;

/// Errors from density-matrix construction and manipulation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityError {
    /// A matrix needs at least one subsystem of dimension >= 1.
    EmptyLayout,
    /// Entry buffer length must be the squared product of the dimensions.
    SizeMismatch { expected: usize, got: usize },
    /// Label list shape must match the subsystem dimensions.
    LabelMismatch { subsystem: usize },
    /// Entries must be finite.
    NonFiniteEntry,
    /// A subsystem index referred to a factor the layout does not have.
    SubsystemOutOfRange { index: usize, count: usize },
    /// `keep` sets must be non-empty and strictly ascending.
    BadKeepSet,
    /// Pure-state input must have unit norm.
    UnnormalizedState { norm: f64 },
    /// The eigensolver requires Hermitian input (within [`HERMITICITY_TOL`]).
    NonHermitian { deviation: f64 },
    /// The off-diagonal norm failed to reach tolerance within
    /// [`MAX_JACOBI_SWEEPS`] sweeps.
    NoConvergence { off_diagonal: f64, sweeps: usize },
}

impl fmt::Display for DensityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DensityError::EmptyLayout => {
                write!(f, "layout needs at least one subsystem of dimension >= 1")
            }
            DensityError::SizeMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            DensityError::LabelMismatch { subsystem } => {
                write!(
                    f,
                    "label list for subsystem {subsystem} has the wrong length"
                )
            }
            DensityError::NonFiniteEntry => write!(f, "matrix entries must be finite"),
            DensityError::SubsystemOutOfRange { index, count } => {
                write!(
                    f,
                    "subsystem index {index} out of range for {count} factors"
                )
            }
            DensityError::BadKeepSet => {
                write!(f, "keep set must be non-empty and strictly ascending")
            }
            DensityError::UnnormalizedState { norm } => {
                write!(f, "pure state must have unit norm, got {norm}")
            }
            DensityError::NonHermitian { deviation } => {
                write!(f, "matrix is not Hermitian (deviation {deviation:e})")
            }
            DensityError::NoConvergence {
                off_diagonal,
                sweeps,
            } => write!(
                f,
                "eigensolver stalled at off-diagonal norm {off_diagonal:e} after {sweeps} sweeps"
            ),
        }
    }
}

impl core::error::Error for DensityError {}

/// Eigenvalues of a Hermitian matrix plus solver telemetry.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    max_residual: f64,
    sweeps_used: usize,
}

impl Spectrum {
    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Largest `||M v - lambda v||_2` over the computed eigenpairs.
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    /// Jacobi sweeps performed before convergence.
    pub fn sweeps_used(&self) -> usize {
        self.sweeps_used
    }

    pub fn min_eigenvalue(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }
}

/// Validation record produced by [`DensityMatrix::validate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityDiagnostics {
    /// `|trace - 1|`.
    pub trace_deviation: f64,
    /// `max_ij |m_ij - conj(m_ji)|`.
    pub hermiticity_deviation: f64,
    /// Smallest eigenvalue, when the matrix was Hermitian enough to solve.
    pub min_eigenvalue: Option<f64>,
    /// True when the smallest eigenvalue is known and below [`PSD_FLOOR`].
    pub psd_violation: bool,
    /// All checks passed: trace and Hermiticity within 1e-12, spectrum
    /// known, no PSD violation.
    pub is_valid: bool,
}

/// A dense square complex matrix over an ordered product of labelled
/// subsystems. Usually a density matrix; partial transposes (indefinite)
/// and solver test matrices reuse the same representation.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    /// Builds a matrix over `dims` with default numeric basis labels.
    pub fn from_entries(dims: Vec<usize>, entries: Vec<Complex64>) -> Result<Self, DensityError> {
        let labels = dims
            .iter()
            .map(|&d| (0..d).map(|i| i.to_string()).collect())
            .collect();
        DensityMatrix::with_labels(dims, labels, entries)
    }

    /// Builds a matrix over `dims` with explicit per-subsystem labels.
    pub fn with_labels(
        dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        entries: Vec<Complex64>,
    ) -> Result<Self, DensityError> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(DensityError::EmptyLayout);
        }
        let dim: usize = dims.iter().product();
        if entries.len() != dim * dim {
            return Err(DensityError::SizeMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        if labels.len() != dims.len() {
            return Err(DensityError::LabelMismatch {
                subsystem: labels.len().min(dims.len()),
            });
        }
        for (i, (d, ls)) in dims.iter().zip(&labels).enumerate() {
            if ls.len() != *d {
                return Err(DensityError::LabelMismatch { subsystem: i });
            }
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(DensityError::NonFiniteEntry);
        }
        Ok(DensityMatrix {
            dims,
            labels,
            entries,
        })
    }

    /// The projector `|state><state|` of a unit-norm pure state, with
    /// subsystem structure and labels taken from the ket layout.
    pub fn from_pure<K: Ket>(state: &crate::fock::StateVector<K>) -> Result<Self, DensityError> {
        let norm = state.norm();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(DensityError::UnnormalizedState { norm });
        }
        let dims: Vec<usize> = K::LAYOUT.iter().map(|r| r.dimension()).collect();
        let labels: Vec<Vec<String>> = K::LAYOUT
            .iter()
            .map(|r| r.basis_labels().iter().map(|s| s.to_string()).collect())
            .collect();
        let dim: usize = dims.iter().product();
        let mut entries = alloc::vec![Complex64::new(0.0, 0.0); dim * dim];
        for (ket_a, amp_a) in state.terms() {
            for (ket_b, amp_b) in state.terms() {
                entries[ket_a.canonical_index() * dim + ket_b.canonical_index()] =
                    amp_a * amp_b.conj();
            }
        }
        DensityMatrix::with_labels(dims, labels, entries)
    }

    /// Subsystem dimensions, slowest factor first.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension (product of the subsystem dimensions).
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    /// Per-subsystem basis labels.
    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim() + col]
    }

    /// Composite label of one row, e.g. `"0_A,1_k"`.
    pub fn row_label(&self, row: usize) -> String {
        let multi = unravel(row, &self.dims);
        let mut out = String::new();
        for (i, &component) in multi.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&self.labels[i][component]);
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        let dim = self.dim();
        (0..dim).map(|i| self.entries[i * dim + i]).sum()
    }

    /// Traces out every subsystem not in `keep` (non-empty, strictly
    /// ascending indices into [`dims`](Self::dims)). Preserves the trace.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self, DensityError> {
        if keep.is_empty() || keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DensityError::BadKeepSet);
        }
        if let Some(&index) = keep.iter().find(|&&k| k >= self.dims.len()) {
            return Err(DensityError::SubsystemOutOfRange {
                index,
                count: self.dims.len(),
            });
        }
        let kept_dims: Vec<usize> = keep.iter().map(|&k| self.dims[k]).collect();
        let kept_labels: Vec<Vec<String>> = keep.iter().map(|&k| self.labels[k].clone()).collect();
        let out_dim: usize = kept_dims.iter().product();
        let mut out = alloc::vec![Complex64::new(0.0, 0.0); out_dim * out_dim];

        let dim = self.dim();
        let traced: Vec<usize> = (0..self.dims.len()).filter(|i| !keep.contains(i)).collect();
        for row in 0..dim {
            let row_multi = unravel(row, &self.dims);
            for col in 0..dim {
                let col_multi = unravel(col, &self.dims);
                if traced.iter().any(|&t| row_multi[t] != col_multi[t]) {
                    continue;
                }
                let kept_row: Vec<usize> = keep.iter().map(|&k| row_multi[k]).collect();
                let kept_col: Vec<usize> = keep.iter().map(|&k| col_multi[k]).collect();
                out[ravel(&kept_row, &kept_dims) * out_dim + ravel(&kept_col, &kept_dims)] +=
                    self.entries[row * dim + col];
            }
        }
        DensityMatrix::with_labels(kept_dims, kept_labels, out)
    }

    /// Transposes the indices of one subsystem, leaving the rest alone.
    /// Hermiticity survives; positivity generally does not — that loss is
    /// exactly what [`crate::measures::negativity`] quantifies.
    pub fn partial_transpose(&self, subsystem: usize) -> Result<Self, DensityError> {
        if subsystem >= self.dims.len() {
            return Err(DensityError::SubsystemOutOfRange {
                index: subsystem,
                count: self.dims.len(),
            });
        }
        let dim = self.dim();
        let mut out = alloc::vec![Complex64::new(0.0, 0.0); dim * dim];
        for row in 0..dim {
            let mut row_multi = unravel(row, &self.dims);
            for col in 0..dim {
                let mut col_multi = unravel(col, &self.dims);
                core::mem::swap(&mut row_multi[subsystem], &mut col_multi[subsystem]);
                let target = ravel(&row_multi, &self.dims) * dim + ravel(&col_multi, &self.dims);
                out[target] = self.entries[row * dim + col];
                // swap back for the next column
                core::mem::swap(&mut row_multi[subsystem], &mut col_multi[subsystem]);
            }
        }
        DensityMatrix::with_labels(self.dims.clone(), self.labels.clone(), out)
    }

    /// Full eigenvalue decomposition at the default tolerance.
    pub fn eigenvalues_hermitian(&self) -> Result<Spectrum, DensityError> {
        self.eigenvalues_hermitian_with_tol(DEFAULT_EIG_TOL)
    }

    /// Cyclic Jacobi diagnonalization of a Hermitian matrix.
    ///
    /// Each pivot `(p, q)` is reduced to a real 2x2 rotation by factoring
    /// out the phase of the pivot entry; sweeps repeat until the
    /// off-diagonal Frobenius norm drops below `tol` or
    /// [`MAX_JACOBI_SWEEPS`] is hit. Residuals `||M v - lambda v||` are
    /// computed against the (symmetrized) input and reported in the
    /// [`Spectrum`].
    pub fn eigenvalues_hermitian_with_tol(&self, tol: f64) -> Result<Spectrum, DensityError> {
        let n = self.dim();
        let mut w = self.entries.clone();

        let deviation = hermiticity_deviation(&w, n);
        if deviation > HERMITICITY_TOL {
            return Err(DensityError::NonHermitian { deviation });
        }
        // fold numerical asymmetry away so the rotations see an exactly
        // Hermitian matrix
        for p in 0..n {
            w[p * n + p] = Complex64::new(w[p * n + p].re, 0.0);
            for q in (p + 1)..n {
                let avg = (w[p * n + q] + w[q * n + p].conj()) * 0.5;
                w[p * n + q] = avg;
                w[q * n + p] = avg.conj();
            }
        }
        let original = w.clone();

        let mut vectors = alloc::vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            vectors[i * n + i] = Complex64::new(1.0, 0.0);
        }

        let mut sweeps_used = 0;
        loop {
            let off = off_diagonal_norm(&w, n);
            if off < tol {
                break;
            }
            if sweeps_used == MAX_JACOBI_SWEEPS {
                return Err(DensityError::NoConvergence {
                    off_diagonal: off,
                    sweeps: sweeps_used,
                });
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    rotate(&mut w, &mut vectors, n, p, q);
                }
            }
            sweeps_used += 1;
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            let (la, lb) = (w[a * n + a].re, w[b * n + b].re);
            lb.partial_cmp(&la).expect("eigenvalues are finite")
        });

        let eigenvalues: Vec<f64> = order.iter().map(|&i| w[i * n + i].re).collect();
        let mut max_residual = 0.0f64;
        for (&col, &lambda) in order.iter().zip(&eigenvalues) {
            let mut residual_sq = 0.0;
            for row in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += original[row * n + k] * vectors[k * n + col];
                }
                acc -= vectors[row * n + col] * lambda;
                residual_sq += acc.norm_sqr();
            }
            max_residual = max_residual.max(flt::sqrt(residual_sq));
        }

        Ok(Spectrum {
            eigenvalues,
            max_residual,
            sweeps_used,
        })
    }

    /// Diagnostic checks for being a physical state: unit trace, Hermitian,
    /// positive semidefinite (within the documented tolerances).
    pub fn validate(&self) -> DensityDiagnostics {
        let n = self.dim();
        let trace_deviation = (self.trace() - Complex64::new(1.0, 0.0)).norm();
        let hermiticity_deviation = hermiticity_deviation(&self.entries, n);
        let min_eigenvalue = if hermiticity_deviation <= HERMITICITY_TOL {
            self.eigenvalues_hermitian()
                .ok()
                .and_then(|s| s.min_eigenvalue())
        } else {
            None
        };
        let psd_violation = min_eigenvalue.is_some_and(|m| m < PSD_FLOOR);
        DensityDiagnostics {
            trace_deviation,
            hermiticity_deviation,
            min_eigenvalue,
            psd_violation,
            is_valid: trace_deviation <= 1e-12
                && hermiticity_deviation <= HERMITICITY_TOL
                && min_eigenvalue.is_some()
                && !psd_violation,
        }
    }

    /// Plain-text dump: one row per line, entries as `re+imi` with 17
    /// significant digits, space-separated, LF newlines. Stable across
    /// runs, for golden-file comparisons.
    pub fn dump(&self) -> String {
        let dim = self.dim();
        let mut out = String::new();
        for row in 0..dim {
            for col in 0..dim {
                if col > 0 {
                    out.push(' ');
                }
                let z = self.entries[row * dim + col];
                write!(out, "{:.16e}{:+.16e}i", z.re, z.im).expect("writing to String");
            }
            out.push('\n');
        }
        out
    }
}

fn unravel(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut multi = alloc::vec![0usize; dims.len()];
    for i in (0..dims.len()).rev() {
        multi[i] = flat % dims[i];
        flat /= dims[i];
    }
    multi
}

fn ravel(multi: &[usize], dims: &[usize]) -> usize {
    multi.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

fn hermiticity_deviation(entries: &[Complex64], n: usize) -> f64 {
    let mut max = 0.0f64;
    for p in 0..n {
        for q in p..n {
            max = max.max((entries[p * n + q] - entries[q * n + p].conj()).norm());
        }
    }
    max
}

fn off_diagonal_norm(entries: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += 2.0 * entries[p * n + q].norm_sqr();
        }
    }
    flt::sqrt(sum)
}

/// One Jacobi rotation zeroing the `(p, q)` entry of the Hermitian working
/// matrix `w`, accumulated into the eigenvector columns `v`.
fn rotate(w: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let pivot = w[p * n + q];
    let magnitude = pivot.norm();
    if magnitude == 0.0 {
        return;
    }
    // factor out the pivot phase: with u = pivot/|pivot| the matrix
    // diag(1, conj(u)) * w * diag(1, u) has a real (p, q) entry, reducing
    // the rotation to the classic real symmetric case
    let u = pivot / magnitude;
    let theta = (w[q * n + q].re - w[p * n + p].re) / (2.0 * magnitude);
    let t = if theta >= 0.0 {
        1.0 / (theta + flt::sqrt(1.0 + theta * theta))
    } else {
        -1.0 / (-theta + flt::sqrt(1.0 + theta * theta))
    };
    let c = 1.0 / flt::sqrt(1.0 + t * t);
    let s = t * c;

    let u_conj = u.conj();
    for i in 0..n {
        let a = w[i * n + p];
        let b = w[i * n + q] * u_conj;
        w[i * n + p] = a * c - b * s;
        w[i * n + q] = a * s + b * c;
    }
    for j in 0..n {
        let a = w[p * n + j];
        let b = w[q * n + j] * u;
        w[p * n + j] = a * c - b * s;
        w[q * n + j] = a * s + b * c;
    }
    w[p * n + q] = Complex64::new(0.0, 0.0);
    w[q * n + p] = Complex64::new(0.0, 0.0);
    w[p * n + p] = Complex64::new(w[p * n + p].re, 0.0);
    w[q * n + q] = Complex64::new(w[q * n + q].re, 0.0);

    for i in 0..n {
        let a = v[i * n + p];
        let b = v[i * n + q] * u_conj;
        v[i * n + p] = a * c - b * s;
        v[i * n + q] = a * s + b * c;
    }
}
