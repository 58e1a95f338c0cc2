//! Shared helpers for the integration tests: a tiny deterministic PRNG
//! (splitmix64) so "random" matrices and states are reproducible down to
//! the bit, plus builders on top of it.

#![allow(dead_code)]

use num_complex::Complex64;
use rindler_core::density::DensityMatrix;
use rindler_core::fock::{BasisKet, StateVector};

pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-1, 1)`.
    pub fn next_signed(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }

    pub fn next_complex(&mut self) -> Complex64 {
        Complex64::new(self.next_signed(), self.next_signed())
    }
}

/// Dense Hermitian matrix with entries of order 1: `(B + B^dagger) / 2`
/// for a uniformly random complex `B`.
pub fn random_hermitian(dim: usize, rng: &mut SplitMix64) -> DensityMatrix {
    let raw: Vec<Complex64> = (0..dim * dim).map(|_| rng.next_complex()).collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            entries[i * dim + j] = (raw[i * dim + j] + raw[j * dim + i].conj()) * 0.5;
        }
    }
    DensityMatrix::from_entries(vec![dim], entries).expect("square buffer")
}

/// Unit-norm state with pseudo-random support on all 32 composite kets.
pub fn random_pure_state(rng: &mut SplitMix64) -> StateVector<BasisKet> {
    let terms: Vec<(BasisKet, Complex64)> = BasisKet::all()
        .into_iter()
        .map(|k| (k, rng.next_complex()))
        .collect();
    StateVector::from_terms(terms)
        .expect("finite amplitudes")
        .normalize()
        .expect("nonzero norm")
}
