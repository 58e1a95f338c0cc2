//! Entanglement between an inertial observer and a uniformly accelerated one,
//! modelled with fermionic field modes.
//!
//! An accelerated observer (Rob) sees the inertial vacuum as a thermal state:
//! each field mode of frequency `omega` acquires an occupation governed by an
//! acceleration-dependent mixing angle `r`, with `tan r = exp(-pi c omega / a)`.
//! This crate builds the relevant two-region Fock space, the mode-mixing
//! operators, the shared states between the inertial observer (Alice) and Rob,
//! and the entanglement/coherence measures evaluated on the reduced density
//! matrices.
//!
//! The crate is `no_std` (with `alloc`): it is pure computation. Command-line
//! tooling and file output live in the companion `rindler-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod density;
pub mod fock;
pub mod measures;
pub mod unruh;

/// Complex amplitude type used throughout the public API, re-exported so
/// downstream crates need not pin a matching `num-complex` themselves.
pub use num_complex::Complex64;

/// Float functions routed through `num_traits::Float` so they resolve the
/// same way whether or not `std` is linked (test harnesses link it, the
/// library itself never does).
pub(crate) mod flt {
    use num_traits::Float;

    pub(crate) fn sqrt(x: f64) -> f64 {
        Float::sqrt(x)
    }

    pub(crate) fn sin(x: f64) -> f64 {
        Float::sin(x)
    }

    pub(crate) fn cos(x: f64) -> f64 {
        Float::cos(x)
    }

    pub(crate) fn exp(x: f64) -> f64 {
        Float::exp(x)
    }

    pub(crate) fn atan(x: f64) -> f64 {
        Float::atan(x)
    }

    pub(crate) fn log2(x: f64) -> f64 {
        Float::log2(x)
    }
}
