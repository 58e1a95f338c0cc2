//! Entanglement and coherence measures for the accelerated-observer state.
//!
//! Everything here is built on two independently testable routes:
//!
//! * a **state route** — build the Alice (x) wedge-I density matrix by
//!   tracing wedge II out of the Bell-type state
//!   ([`alice_rob_density`]), then diagonalize;
//! * a **closed-form route** — the hand-derived reduced matrix
//!   ([`closed_form_reduced_matrix`]), its spectrum
//!   ([`closed_form_spectrum`]) and the negativity formula
//!   ([`closed_form_negativity`]).
//!
//! The two routes are deliberately kept separate so the tests can play them
//! against each other; [`report`] (what the CLI consumes) uses only the
//! state route.
//!
//! Sign conventions: entropies are base-2; the negativity is the absolute
//! sum of the negative eigenvalues of the partial transpose; the coherence
//! is the relative-entropy form `S(diag(rho)) - S(rho)` in the
//! occupation basis.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::density::{DensityError, DensityMatrix, PSD_FLOOR};
use crate::flt;
use crate::fock::{Momentum, Region};
use crate::unruh::{occupation_expectation, vacuum_state, ParamError, RindlerParams};

/// Eigenvalue sums may drift from 1 by at most this much before a spectrum
/// is rejected as unnormalized.
pub const SPECTRUM_SUM_TOL: f64 = 1e-8;

/// Errors from measure evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureError {
    /// A density-matrix operation failed.
    Density(DensityError),
    /// Parameter validation failed.
    Param(ParamError),
    /// An eigenvalue was more negative than the PSD noise floor.
    NegativeEigenvalue { value: f64 },
    /// The spectrum did not sum to 1 within [`SPECTRUM_SUM_TOL`].
    UnnormalizedSpectrum { sum: f64 },
    /// Binary entropy takes probabilities in `[0, 1]`.
    InvalidProbability { value: f64 },
}

impl core::fmt::Display for MeasureError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            MeasureError::Density(e) => write!(f, "density matrix error: {e}"),
            MeasureError::Param(e) => write!(f, "parameter error: {e}"),
            MeasureError::NegativeEigenvalue { value } => {
                write!(f, "eigenvalue {value:e} below the PSD noise floor")
            }
            MeasureError::UnnormalizedSpectrum { sum } => {
                write!(f, "spectrum sums to {sum}, expected 1")
            }
            MeasureError::InvalidProbability { value } => {
                write!(f, "probability {value} outside [0, 1]")
            }
        }
    }
}

impl core::error::Error for MeasureError {}

impl From<DensityError> for MeasureError {
    fn from(e: DensityError) -> Self {
        MeasureError::Density(e)
    }
}

impl From<ParamError> for MeasureError {
    fn from(e: ParamError) -> Self {
        MeasureError::Param(e)
    }
}

/// Von Neumann entropy (base 2) of a density-matrix spectrum.
///
/// Eigenvalues in `[PSD_FLOOR, 0)` are clipped to zero as diagonalization
/// noise; anything below [`PSD_FLOOR`] is an error, as is a spectrum whose
/// sum strays from 1 by more than [`SPECTRUM_SUM_TOL`].
pub fn von_neumann_entropy(spectrum: &[f64]) -> Result<f64, MeasureError> {
    let mut sum = 0.0;
    let mut entropy = 0.0;
    for &lambda in spectrum {
        if lambda < PSD_FLOOR || !lambda.is_finite() {
            return Err(MeasureError::NegativeEigenvalue { value: lambda });
        }
        let clipped = if lambda < 0.0 { 0.0 } else { lambda };
        sum += clipped;
        if clipped > 0.0 {
            entropy -= clipped * flt::log2(clipped);
        }
    }
    if (sum - 1.0).abs() > SPECTRUM_SUM_TOL {
        return Err(MeasureError::UnnormalizedSpectrum { sum });
    }
    Ok(entropy)
}

/// Binary entropy `h(p) = -p log2 p - (1-p) log2 (1-p)`.
pub fn binary_entropy(p: f64) -> Result<f64, MeasureError> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(MeasureError::InvalidProbability { value: p });
    }
    if p == 0.0 || p == 1.0 {
        return Ok(0.0);
    }
    Ok(-p * flt::log2(p) - (1.0 - p) * flt::log2(1.0 - p))
}

/// Purity `tr(rho^2)`, computed directly from the entries.
pub fn purity(rho: &DensityMatrix) -> f64 {
    let n = rho.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            sum += (rho.entry(i, j) * rho.entry(j, i)).re;
        }
    }
    sum
}

/// Negativity: the absolute sum of the negative eigenvalues of the partial
/// transpose over `subsystem`. Zero for separable states; eigenvalues above
/// [`PSD_FLOOR`] count as noise, not entanglement.
pub fn negativity(rho: &DensityMatrix, subsystem: usize) -> Result<f64, MeasureError> {
    let transposed = rho.partial_transpose(subsystem)?;
    let spectrum = transposed.eigenvalues_hermitian()?;
    Ok(spectrum
        .eigenvalues()
        .iter()
        .filter(|&&lambda| lambda < PSD_FLOOR)
        .map(|&lambda| -lambda)
        .sum())
}

/// Relative entropy of coherence in the occupation basis:
/// `S(diag(rho)) - S(rho)`.
pub fn rel_entropy_coherence(rho: &DensityMatrix) -> Result<f64, MeasureError> {
    let spectrum = rho.eigenvalues_hermitian()?;
    let n = rho.dim();
    let diagonal: Vec<f64> = (0..n).map(|i| rho.entry(i, i).re).collect();
    let s_diag = von_neumann_entropy(&diagonal)?;
    let s_rho = von_neumann_entropy(spectrum.eigenvalues())?;
    Ok(s_diag - s_rho)
}

/// State route to the Alice (x) wedge-I density matrix: project the
/// Bell-type state and trace out wedge II.
pub fn alice_rob_density(params: &RindlerParams) -> Result<DensityMatrix, MeasureError> {
    let bell = crate::unruh::bell_state(params);
    let rho = DensityMatrix::from_pure(&bell)?;
    Ok(rho.partial_trace(&[0, 1])?)
}

/// Closed-form route to the same 8x8 matrix, written out entry by entry
/// from the hand-derived reduction. Exactly phase-independent; rows and
/// columns follow the canonical Alice (x) wedge-I ordering.
///
/// Note the weight on the `(0_A 0_-k, 1_A 1_-k)` coherence: it is the
/// `beta^2` branch weight, making the matrix Hermitian with the expected
/// spectrum; the tests discriminate this against the (broken) variant that
/// reuses `alpha^2` there.
pub fn closed_form_reduced_matrix(params: &RindlerParams) -> DensityMatrix {
    let alpha_sq = params.alpha() * params.alpha();
    let beta_sq = params.beta() * params.beta();
    let cos_r = flt::cos(params.r());
    let sin_r = flt::sin(params.r());
    let (c2, s2) = (cos_r * cos_r, sin_r * sin_r);

    let mut m = [[0.0f64; 8]; 8];
    // |0_A> branch: vacuum survives the trace on its diagonal ...
    m[0][0] = alpha_sq * c2 / 2.0; // 0_A, 0_k
    m[1][1] = beta_sq * c2 / 2.0; // 0_A, 0_-k
    m[2][2] = alpha_sq * s2 / 2.0; // 0_A, 1_k
    m[3][3] = beta_sq * s2 / 2.0; // 0_A, 1_-k
                                  // ... |1_A> branch: the one-particle state is already wedge-I diagonal
    m[6][6] = alpha_sq / 2.0; // 1_A, 1_k
    m[7][7] = beta_sq / 2.0; // 1_A, 1_-k
                             // cross-branch coherences survive only where the wedge-II content of
                             // vacuum and one-particle branches overlaps
    m[0][6] = alpha_sq * cos_r / 2.0;
    m[6][0] = m[0][6];
    m[1][7] = beta_sq * cos_r / 2.0;
    m[7][1] = m[1][7];

    let entries: Vec<Complex64> = m
        .iter()
        .flat_map(|row| row.iter().map(|&x| Complex64::new(x, 0.0)))
        .collect();
    let labels = [Region::Alice, Region::RindlerI]
        .iter()
        .map(|r| r.basis_labels().iter().map(|s| s.to_string()).collect())
        .collect();
    DensityMatrix::with_labels(alloc::vec![2, 4], labels, entries)
        .expect("closed-form layout is fixed")
}

/// Closed-form spectrum of the reduced matrix, descending: the branch
/// weights `{alpha^2, beta^2}` times `{sin^2 r / 2, (3 + cos 2r)/4}`,
/// padded with four exact zeros.
pub fn closed_form_spectrum(params: &RindlerParams) -> [f64; 8] {
    let alpha_sq = params.alpha() * params.alpha();
    let beta_sq = params.beta() * params.beta();
    let sin_r = flt::sin(params.r());
    let small = sin_r * sin_r / 2.0;
    let large = (3.0 + flt::cos(2.0 * params.r())) / 4.0;

    let mut values = [
        alpha_sq * small,
        beta_sq * small,
        alpha_sq * large,
        beta_sq * large,
        0.0,
        0.0,
        0.0,
        0.0,
    ];
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    values
}

/// Closed-form negativity of the reduced state: `cos^2(r) / 2`,
/// independent of the branch weight.
pub fn closed_form_negativity(r: f64) -> f64 {
    let cos_r = flt::cos(r);
    cos_r * cos_r / 2.0
}

/// Every measure the CLI reports, evaluated through the state route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureReport {
    pub alpha: f64,
    pub r: f64,
    pub phi: f64,
    /// Entanglement entropy of the Alice (x) wedge-I reduction, base 2.
    pub entropy: f64,
    /// Negativity across the Alice | wedge-I cut.
    pub negativity: f64,
    /// Purity of the reduction.
    pub purity: f64,
    /// Relative entropy of coherence of the reduction.
    pub coherence: f64,
    /// Mean wedge-I particle number in the two-branch vacuum.
    pub occupation: f64,
}

/// Evaluates all measures for one parameter point.
pub fn report(params: &RindlerParams) -> Result<MeasureReport, MeasureError> {
    let rho = alice_rob_density(params)?;
    let spectrum = rho.eigenvalues_hermitian()?;
    let entropy = von_neumann_entropy(spectrum.eigenvalues())?;
    let neg = negativity(&rho, 0)?;
    let pur = purity(&rho);
    let coherence = rel_entropy_coherence(&rho)?;
    let occupation = occupation_expectation(
        &vacuum_state(params),
        Region::RindlerI,
        &[Momentum::PlusK, Momentum::MinusK],
    )?;
    Ok(MeasureReport {
        alpha: params.alpha(),
        r: params.r(),
        phi: params.phi(),
        entropy,
        negativity: neg,
        purity: pur,
        coherence,
        occupation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, FRAC_PI_8};

    const PHI_GRID: [f64; 3] = [0.0, core::f64::consts::FRAC_PI_3, core::f64::consts::PI];

    fn params(alpha: f64, r: f64, phi: f64) -> RindlerParams {
        RindlerParams::new(alpha, r, phi).unwrap()
    }

    #[test]
    fn entropy_of_point_masses_and_uniform_spectra() {
        assert_eq!(von_neumann_entropy(&[1.0, 0.0, 0.0]).unwrap(), 0.0);
        assert_abs_diff_eq!(
            von_neumann_entropy(&[0.5, 0.5]).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            von_neumann_entropy(&[0.25; 4]).unwrap(),
            2.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn entropy_clips_noise_but_rejects_real_violations() {
        let noisy = [1.0, -5e-11];
        assert_eq!(von_neumann_entropy(&noisy).unwrap(), 0.0);
        assert!(matches!(
            von_neumann_entropy(&[1.0, -1e-9]),
            Err(MeasureError::NegativeEigenvalue { .. })
        ));
        assert!(matches!(
            von_neumann_entropy(&[0.6, 0.6]),
            Err(MeasureError::UnnormalizedSpectrum { .. })
        ));
    }

    #[test]
    fn binary_entropy_endpoints_and_quarter_point() {
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(binary_entropy(0.5).unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(
            binary_entropy(0.25).unwrap(),
            0.8112781244591328,
            epsilon = 1e-15
        );
        assert!(matches!(
            binary_entropy(-0.1),
            Err(MeasureError::InvalidProbability { .. })
        ));
        assert!(matches!(
            binary_entropy(1.1),
            Err(MeasureError::InvalidProbability { .. })
        ));
        assert!(matches!(
            binary_entropy(f64::NAN),
            Err(MeasureError::InvalidProbability { .. })
        ));
    }

    #[test]
    fn closed_form_spectrum_matches_frozen_values() {
        let spectrum = closed_form_spectrum(&params(0.3, FRAC_PI_8, 0.0));
        let expected = [
            0.8433667927199393,
            0.08340990257669731,
            0.06663320728006042,
            0.00659009742330268,
            0.0,
            0.0,
            0.0,
            0.0,
        ];
        for (have, want) in spectrum.iter().zip(expected) {
            assert_abs_diff_eq!(have, &want, epsilon = 1e-15);
        }
        let total: f64 = spectrum.iter().sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn the_two_routes_to_the_reduced_matrix_agree() {
        for &alpha in &[0.3, FRAC_1_SQRT_2, 1.0] {
            for &r in &[0.0, FRAC_PI_8, FRAC_PI_4] {
                for &phi in &PHI_GRID {
                    let p = params(alpha, r, phi);
                    let traced = alice_rob_density(&p).unwrap();
                    let closed = closed_form_reduced_matrix(&p);
                    assert_eq!(traced.dims(), closed.dims());
                    for row in 0..8 {
                        for col in 0..8 {
                            let diff = (traced.entry(row, col) - closed.entry(row, col)).norm();
                            assert!(
                                diff <= 1e-12,
                                "alpha={alpha} r={r} phi={phi} entry ({row},{col}) differs by {diff:e}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn the_traced_reduction_is_phase_independent() {
        let base = alice_rob_density(&params(0.3, FRAC_PI_8, 0.0)).unwrap();
        for &phi in &PHI_GRID[1..] {
            let other = alice_rob_density(&params(0.3, FRAC_PI_8, phi)).unwrap();
            for row in 0..8 {
                for col in 0..8 {
                    let diff = (base.entry(row, col) - other.entry(row, col)).norm();
                    assert!(
                        diff <= 1e-15,
                        "phi={phi}: entry ({row},{col}) moved {diff:e}"
                    );
                }
            }
        }
    }

    #[test]
    fn breaking_the_cross_branch_weight_breaks_the_spectrum() {
        // The variant that reuses the alpha^2 weight on the second
        // coherence pair stays Hermitian but has the wrong spectrum; this
        // pins down which reading of the reduced matrix is implemented.
        let p = params(0.3, FRAC_PI_8, 0.0);
        let good = closed_form_reduced_matrix(&p);
        let mut entries: Vec<Complex64> = good.entries().to_vec();
        let alpha_sq = p.alpha() * p.alpha();
        let wrong = Complex64::new(alpha_sq * flt::cos(p.r()) / 2.0, 0.0);
        entries[8 + 7] = wrong; // (1, 7)
        entries[7 * 8 + 1] = wrong; // (7, 1)
        let broken = DensityMatrix::from_entries(alloc::vec![2, 4], entries).unwrap();

        let reference = closed_form_spectrum(&p);
        let broken_spectrum = broken.eigenvalues_hermitian().unwrap();
        let good_spectrum = good.eigenvalues_hermitian().unwrap();

        let max_good: f64 = good_spectrum
            .eigenvalues()
            .iter()
            .zip(reference)
            .map(|(have, want)| (have - want).abs())
            .fold(0.0, f64::max);
        assert!(max_good <= 1e-10, "correct matrix drifted {max_good:e}");

        let max_broken: f64 = broken_spectrum
            .eigenvalues()
            .iter()
            .zip(reference)
            .map(|(have, want)| (have - want).abs())
            .fold(0.0, f64::max);
        assert!(
            max_broken > 1e-3,
            "broken variant unexpectedly matches ({max_broken:e})"
        );
    }

    #[test]
    fn report_matches_the_frozen_pipeline_values() {
        let rep = report(&params(0.3, FRAC_PI_8, core::f64::consts::FRAC_PI_3)).unwrap();
        assert_abs_diff_eq!(rep.entropy, 0.8143086820903965, epsilon = 1e-9);
        assert_abs_diff_eq!(rep.negativity, 0.42677669529663675, epsilon = 1e-9);
        assert_abs_diff_eq!(rep.purity, 0.7227081726070474, epsilon = 1e-9);
        assert_abs_diff_eq!(rep.coherence, 0.9225991533201344, epsilon = 1e-9);
        assert_abs_diff_eq!(rep.occupation, 0.14644660940672624, epsilon = 1e-12);
    }

    #[test]
    fn report_limits_at_zero_mixing_and_max_mixing() {
        let cold = report(&params(1.0, 0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(cold.entropy, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(cold.negativity, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(cold.purity, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cold.coherence, 1.0, epsilon = 1e-9);
        assert_eq!(cold.occupation, 0.0);

        let hot = report(&params(1.0, FRAC_PI_4, 0.0)).unwrap();
        assert_abs_diff_eq!(hot.entropy, 0.8112781244591329, epsilon = 1e-9);
        assert_abs_diff_eq!(hot.negativity, 0.25, epsilon = 1e-9);
        assert_abs_diff_eq!(hot.purity, 0.625, epsilon = 1e-12);
        assert_abs_diff_eq!(hot.coherence, 0.6887218755408671, epsilon = 1e-9);
        assert_abs_diff_eq!(hot.occupation, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn negativity_tracks_the_closed_form_for_every_weight() {
        for &alpha in &[0.0, 0.3, FRAC_1_SQRT_2, 0.9, 1.0] {
            for &r in &[0.0, FRAC_PI_8, FRAC_PI_4] {
                let rho = alice_rob_density(&params(alpha, r, 0.0)).unwrap();
                let neg = negativity(&rho, 0).unwrap();
                assert_abs_diff_eq!(neg, closed_form_negativity(r), epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn purity_from_entries_matches_purity_from_the_spectrum() {
        for &(alpha, r) in &[(0.3, FRAC_PI_8), (FRAC_1_SQRT_2, FRAC_PI_4), (1.0, 0.1)] {
            let rho = alice_rob_density(&params(alpha, r, 0.0)).unwrap();
            let from_entries = purity(&rho);
            let from_spectrum: f64 = rho
                .eigenvalues_hermitian()
                .unwrap()
                .eigenvalues()
                .iter()
                .map(|l| l * l)
                .sum();
            assert_abs_diff_eq!(from_entries, from_spectrum, epsilon = 1e-12);
        }
    }

    #[test]
    fn entropy_decomposes_into_thermal_plus_branch_mixing() {
        for &alpha in &[0.3, FRAC_1_SQRT_2, 0.9] {
            for &r in &[0.0, FRAC_PI_8, FRAC_PI_4] {
                let split = report(&params(alpha, r, 0.0)).unwrap().entropy;
                let pure_branch = report(&params(1.0, r, 0.0)).unwrap().entropy;
                let mixing = binary_entropy(alpha * alpha).unwrap();
                assert_abs_diff_eq!(split, pure_branch + mixing, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn coherence_ignores_the_branch_weight() {
        let reference = report(&params(0.3, FRAC_PI_8, 0.0)).unwrap().coherence;
        for &alpha in &[0.0, FRAC_1_SQRT_2, 0.9, 1.0] {
            let coherence = report(&params(alpha, FRAC_PI_8, 0.0)).unwrap().coherence;
            assert_abs_diff_eq!(coherence, reference, epsilon = 1e-9);
        }
    }
}
