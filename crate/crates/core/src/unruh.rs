//! Acceleration-dependent mode mixing and the observer states built from it.
//!
//! A uniformly accelerated observer (Rob, proper acceleration `a`) does not
//! share the inertial observer's notion of a vacuum. For a fermionic field
//! mode of frequency `omega`, the inertial vacuum appears to Rob as a
//! two-mode squeezed state across the two Rindler wedges, parameterized by a
//! mixing angle
//!
//! ```text
//! r = arctan( exp(-pi c omega / a) ),      r in [0, pi/4],
//! ```
//!
//! so `r -> 0` in the inertial limit and `r -> pi/4` for infinite
//! acceleration. The wedge-I mode occupation Rob measures in that vacuum is
//! Fermi-Dirac thermal,
//!
//! ```text
//! <n> = sin^2 r = 1 / (exp(hbar omega / k_B T) + 1),
//! T = hbar a / (2 pi k_B c),
//! ```
//!
//! with `T` the Unruh temperature. This module builds the entangled vacuum
//! in its two-momentum generalized form (a superposition of `+k`/`-k`
//! branch weights `alpha` and `beta = sqrt(1 - alpha^2)`), the matching
//! creation operator, the one-particle excitation it produces, and the
//! Alice-Rob Bell state whose reductions the [`crate::measures`] module
//! analyses.

use alloc::vec;
use core::f64::consts::{FRAC_PI_4, PI, TAU};
use core::fmt;

use num_complex::Complex64;

use crate::flt;
use crate::fock::{
    tensor_with_alice, BasisKet, Ket, Ladder, LinearOperator, Momentum, Region, RobKet, StateVector,
};

/// Parameter-validation errors for this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamError {
    /// Branch weight `alpha` must lie in `[0, 1]`.
    AlphaOutOfRange(f64),
    /// Mixing angle `r` must lie in `[0, pi/4]`.
    MixingAngleOutOfRange(f64),
    /// A parameter that must be finite was not.
    NonFinite { name: &'static str, value: f64 },
    /// A parameter that must be strictly positive was not.
    NonPositive { name: &'static str, value: f64 },
    /// Expectation values are defined for unit-norm states.
    UnnormalizedState { norm: f64 },
    /// The state's layout has no slot for the requested subsystem.
    MissingSubsystem { region: Region },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::AlphaOutOfRange(a) => {
                write!(f, "alpha must lie in [0, 1], got {a}")
            }
            ParamError::MixingAngleOutOfRange(r) => {
                write!(f, "mixing angle r must lie in [0, pi/4], got {r}")
            }
            ParamError::NonFinite { name, value } => {
                write!(f, "{name} must be finite, got {value}")
            }
            ParamError::NonPositive { name, value } => {
                write!(f, "{name} must be strictly positive, got {value}")
            }
            ParamError::UnnormalizedState { norm } => {
                write!(f, "state must have unit norm, got norm {norm}")
            }
            ParamError::MissingSubsystem { region } => {
                write!(f, "state layout has no {region:?} subsystem")
            }
        }
    }
}

impl core::error::Error for ParamError {}

/// Unit conventions for the dimensionful constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    /// `hbar = c = k_B = 1`.
    Natural,
    /// 2019 SI exact values.
    Si,
}

/// The constants entering the acceleration/temperature formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    hbar: f64,
    c: f64,
    k_b: f64,
    units: UnitSystem,
}

impl PhysicalConstants {
    pub fn natural() -> Self {
        PhysicalConstants {
            hbar: 1.0,
            c: 1.0,
            k_b: 1.0,
            units: UnitSystem::Natural,
        }
    }

    pub fn si() -> Self {
        PhysicalConstants {
            hbar: 1.054_571_817e-34, // J s
            c: 299_792_458.0,        // m / s
            k_b: 1.380_649e-23,      // J / K
            units: UnitSystem::Si,
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn k_b(&self) -> f64 {
        self.k_b
    }

    pub fn units(&self) -> UnitSystem {
        self.units
    }
}

/// A proper acceleration paired with the probed mode frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationSpec {
    a: f64,
    omega: f64,
}

impl AccelerationSpec {
    pub fn new(a: f64, omega: f64) -> Result<Self, ParamError> {
        for (name, value) in [("acceleration", a), ("omega", omega)] {
            if !value.is_finite() {
                return Err(ParamError::NonFinite { name, value });
            }
            if value <= 0.0 {
                return Err(ParamError::NonPositive { name, value });
            }
        }
        Ok(AccelerationSpec { a, omega })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }
}

/// Mixing angle seen by an observer of proper acceleration `a` probing a
/// mode of frequency `omega`: `r = arctan(exp(-pi c omega / a))`.
///
/// Monotone increasing in `a`, with `r -> 0` as `a -> 0` and `r -> pi/4`
/// as `a -> infinity`.
pub fn r_from_acceleration(accel: &AccelerationSpec, consts: &PhysicalConstants) -> f64 {
    flt::atan(flt::exp(-PI * consts.c() * accel.omega() / accel.a()))
}

/// Unruh temperature `T = hbar a / (2 pi k_B c)`.
pub fn unruh_temperature(a: f64, consts: &PhysicalConstants) -> Result<f64, ParamError> {
    if !a.is_finite() {
        return Err(ParamError::NonFinite {
            name: "acceleration",
            value: a,
        });
    }
    if a <= 0.0 {
        return Err(ParamError::NonPositive {
            name: "acceleration",
            value: a,
        });
    }
    Ok(consts.hbar() * a / (2.0 * PI * consts.k_b() * consts.c()))
}

/// Thermal occupation of a wedge mode at mixing angle `r`: `sin^2 r`, the
/// Fermi-Dirac value `1 / (exp(hbar omega / k_B T) + 1)` at the Unruh
/// temperature matching `r`.
pub fn fd_occupation(r: f64) -> Result<f64, ParamError> {
    if !(0.0..=FRAC_PI_4).contains(&r) {
        return Err(ParamError::MixingAngleOutOfRange(r));
    }
    let s = flt::sin(r);
    Ok(s * s)
}

/// The full parameter set of the shared states: branch weight `alpha`
/// (with `beta = sqrt(1 - alpha^2)` derived), mixing angle `r`, and the
/// relative phase `phi` between the branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RindlerParams {
    alpha: f64,
    beta: f64,
    r: f64,
    phi: f64,
}

impl RindlerParams {
    /// Validates `alpha in [0, 1]` and `r in [0, pi/4]`; `phi` may be any
    /// finite angle and is stored reduced into `[0, 2 pi)`.
    pub fn new(alpha: f64, r: f64, phi: f64) -> Result<Self, ParamError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(ParamError::AlphaOutOfRange(alpha));
        }
        if !(0.0..=FRAC_PI_4).contains(&r) {
            return Err(ParamError::MixingAngleOutOfRange(r));
        }
        if !phi.is_finite() {
            return Err(ParamError::NonFinite {
                name: "phi",
                value: phi,
            });
        }
        let mut phi = phi % TAU;
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(RindlerParams {
            alpha,
            beta: flt::sqrt(1.0 - alpha * alpha),
            r,
            phi,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// The parameter set with the `+k`/`-k` branch weights interchanged.
    ///
    /// Swaps the stored `(alpha, beta)` pair bitwise, so relabeling the
    /// momenta of [`vacuum_state`] maps one parameter set onto the other
    /// exactly, with no square-root round-trip.
    pub fn with_swapped_weights(&self) -> Self {
        RindlerParams {
            alpha: self.beta,
            beta: self.alpha,
            ..*self
        }
    }
}

/// The creation operator for Alice's Minkowski mode, expressed in wedge
/// modes and generalized over both momentum branches:
///
/// ```text
/// a_k^dag = sum_{q in {+k,-k}}  cos r c_{q,I}^dag  -  e^{i phi} sin r d_{q,II}
/// ```
pub fn minkowski_creation_operator(p: &RindlerParams) -> LinearOperator {
    let cos_r = Complex64::new(flt::cos(p.r()), 0.0);
    let sin_r = Complex64::from_polar(flt::sin(p.r()), p.phi());
    LinearOperator::new(vec![
        (
            cos_r,
            vec![Ladder::create(Region::RindlerI, Momentum::PlusK).unwrap()],
        ),
        (
            cos_r,
            vec![Ladder::create(Region::RindlerI, Momentum::MinusK).unwrap()],
        ),
        (
            -sin_r,
            vec![Ladder::annihilate(Region::RindlerII, Momentum::PlusK).unwrap()],
        ),
        (
            -sin_r,
            vec![Ladder::annihilate(Region::RindlerII, Momentum::MinusK).unwrap()],
        ),
    ])
}

/// The single-branch restriction of [`minkowski_creation_operator`]:
/// `cos r c_{+k,I}^dag - e^{i phi} sin r d_{-k,II}`, appropriate when only
/// the `+k` branch is populated (`alpha = 1`).
pub fn single_mode_creation_operator(p: &RindlerParams) -> LinearOperator {
    let cos_r = Complex64::new(flt::cos(p.r()), 0.0);
    let sin_r = Complex64::from_polar(flt::sin(p.r()), p.phi());
    LinearOperator::new(vec![
        (
            cos_r,
            vec![Ladder::create(Region::RindlerI, Momentum::PlusK).unwrap()],
        ),
        (
            -sin_r,
            vec![Ladder::annihilate(Region::RindlerII, Momentum::MinusK).unwrap()],
        ),
    ])
}

/// The inertial vacuum as Rob sees it: a two-branch entangled state over
/// the wedges,
///
/// ```text
/// |0>  =  alpha ( cos r |0_k, 0_-k>  +  e^{-i phi} sin r |1_k, 1_-k> )
///       + beta  ( cos r |0_-k, 0_k>  +  e^{-i phi} sin r |1_-k, 1_k> )
/// ```
///
/// (wedge-I label first, wedge-II second). Unit norm by construction; the
/// adjoint of [`minkowski_creation_operator`] annihilates it.
pub fn vacuum_state(p: &RindlerParams) -> StateVector<RobKet> {
    let cos_r = flt::cos(p.r());
    let sin_r = flt::sin(p.r());
    let phase = Complex64::from_polar(1.0, -p.phi());
    let real = |x: f64| Complex64::new(x, 0.0);
    StateVector::from_terms([
        (
            RobKet::build((Momentum::PlusK, 0), (Momentum::MinusK, 0)).unwrap(),
            real(p.alpha() * cos_r),
        ),
        (
            RobKet::build((Momentum::PlusK, 1), (Momentum::MinusK, 1)).unwrap(),
            phase * (p.alpha() * sin_r),
        ),
        (
            RobKet::build((Momentum::MinusK, 0), (Momentum::PlusK, 0)).unwrap(),
            real(p.beta() * cos_r),
        ),
        (
            RobKet::build((Momentum::MinusK, 1), (Momentum::PlusK, 1)).unwrap(),
            phase * (p.beta() * sin_r),
        ),
    ])
    .expect("vacuum amplitudes are finite")
}

/// The one-particle excitation of the vacuum, obtained by actually applying
/// [`minkowski_creation_operator`] — not from the closed form, which
/// [`one_particle_state_closed_form`] provides separately for cross-checks.
pub fn one_particle_state(p: &RindlerParams) -> StateVector<RobKet> {
    minkowski_creation_operator(p).apply(&vacuum_state(p))
}

/// Closed form of the one-particle state,
/// `alpha |1_k, 0_-k> + beta |1_-k, 0_k>`, phase-free for every `phi`.
pub fn one_particle_state_closed_form(p: &RindlerParams) -> StateVector<RobKet> {
    StateVector::from_terms([
        (
            RobKet::build((Momentum::PlusK, 1), (Momentum::MinusK, 0)).unwrap(),
            Complex64::new(p.alpha(), 0.0),
        ),
        (
            RobKet::build((Momentum::MinusK, 1), (Momentum::PlusK, 0)).unwrap(),
            Complex64::new(p.beta(), 0.0),
        ),
    ])
    .expect("closed-form amplitudes are finite")
}

/// The maximally entangled Alice-Rob state
/// `(|0_A> (x) |vacuum> + |1_A> (x) |one particle|) / sqrt(2)`,
/// with the one-particle branch produced by operator application.
pub fn bell_state(p: &RindlerParams) -> StateVector<BasisKet> {
    let half = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let vacuum_branch = tensor_with_alice((half, zero), &vacuum_state(p));
    let particle_branch = tensor_with_alice((zero, half), &one_particle_state(p));
    vacuum_branch.add(&particle_branch)
}

/// Expected total occupation of `region`'s modes with momentum in
/// `momenta`, for a unit-norm state:
/// `sum_kets |amp|^2 * occupation(matching sector)`.
///
/// On the vacuum with both momenta counted this is the thermal value
/// `sin^2 r` for every `alpha`.
pub fn occupation_expectation<K: Ket>(
    state: &StateVector<K>,
    region: Region,
    momenta: &[Momentum],
) -> Result<f64, ParamError> {
    if !K::LAYOUT.contains(&region) {
        return Err(ParamError::MissingSubsystem { region });
    }
    let norm = state.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(ParamError::UnnormalizedState { norm });
    }
    let mut total = 0.0;
    for (ket, amp) in state.terms() {
        let sector = ket.sector(region).expect("layout checked above");
        if momenta.contains(&sector.tag().momentum()) {
            total += amp.norm_sqr() * f64::from(sector.occupation());
        }
    }
    Ok(total)
}
