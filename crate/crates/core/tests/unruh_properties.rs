//! Grid-level properties of the accelerated-observer construction:
//! vacuum annihilation, thermal statistics, operator-vs-closed-form
//! agreement, norm preservation, and the momentum-relabelling symmetry.

use num_complex::Complex64;
use rindler_core::fock::{Momentum, Region, RobKet, StateVector};
use rindler_core::unruh::{
    bell_state, fd_occupation, minkowski_creation_operator, occupation_expectation,
    one_particle_state, one_particle_state_closed_form, r_from_acceleration, unruh_temperature,
    vacuum_state, AccelerationSpec, PhysicalConstants, RindlerParams,
};
use std::f64::consts::{FRAC_PI_3, FRAC_PI_4, PI};

fn alpha_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

fn r_grid(points: usize) -> Vec<f64> {
    (0..points)
        .map(|i| FRAC_PI_4 * (i as f64 / (points - 1) as f64))
        .collect()
}

const PHI_GRID: [f64; 4] = [0.0, FRAC_PI_3, PI, 5.5];

fn dense_params() -> Vec<RindlerParams> {
    let mut out = Vec::new();
    for &alpha in &alpha_grid() {
        for &r in &r_grid(21) {
            for &phi in &PHI_GRID {
                out.push(RindlerParams::new(alpha, r, phi).unwrap());
            }
        }
    }
    out
}

#[test]
fn the_minkowski_annihilator_kills_the_vacuum_on_a_dense_grid() {
    for params in dense_params() {
        let annihilator = minkowski_creation_operator(&params).adjoint();
        let residual = annihilator.apply(&vacuum_state(&params));
        assert!(
            residual.norm() < 1e-12,
            "vacuum survived annihilation at alpha={} r={} phi={}: norm {}",
            params.alpha(),
            params.r(),
            params.phi(),
            residual.norm()
        );
    }
}

#[test]
fn occupation_is_fermi_dirac_at_the_horizon_temperature() {
    let consts = PhysicalConstants::natural();
    for k in 0..=24 {
        let a = 0.1 * 1000.0f64.powf(k as f64 / 24.0);
        for &omega in &[0.5, 1.0, 2.0] {
            let spec = AccelerationSpec::new(a, omega).unwrap();
            let r = r_from_acceleration(&spec, &consts);
            let temperature = unruh_temperature(a, &consts).unwrap();
            let boltzmann = 1.0 / ((omega / temperature).exp() + 1.0);
            let occupation = fd_occupation(r).unwrap();
            assert!(
                (occupation - boltzmann).abs() < 1e-12,
                "thermality violated at a={a} omega={omega}: {occupation} vs {boltzmann}"
            );
        }
    }
}

#[test]
fn si_units_reproduce_the_frozen_occupation() {
    let consts = PhysicalConstants::si();
    let omega = 1.0e3;
    let a = PI * 299_792_458.0 * omega; // exponent -pi c omega / a = -1
    let spec = AccelerationSpec::new(a, omega).unwrap();
    let r = r_from_acceleration(&spec, &consts);
    assert!((r - 0.352_513_421_777_619).abs() < 1e-12);
    // hbar omega / (k_B T) = 2 pi c omega / a = 2
    let occupation = fd_occupation(r).unwrap();
    assert!((occupation - 0.119_202_922_022_117_56).abs() < 1e-12);
}

#[test]
fn operator_route_equals_closed_form_on_a_dense_grid() {
    for params in dense_params() {
        let by_operator = one_particle_state(&params);
        let closed = one_particle_state_closed_form(&params);
        let diff = by_operator.add(&closed.scale(Complex64::new(-1.0, 0.0)));
        assert!(
            diff.norm() < 1e-12,
            "routes disagree at alpha={} r={} phi={}: {}",
            params.alpha(),
            params.r(),
            params.phi(),
            diff.norm()
        );
    }
}

#[test]
fn vacuum_one_particle_and_bell_states_stay_normalized() {
    for params in dense_params() {
        assert!((vacuum_state(&params).norm() - 1.0).abs() < 1e-12);
        assert!((one_particle_state(&params).norm() - 1.0).abs() < 1e-12);
        assert!((bell_state(&params).norm() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn relabelling_momenta_swaps_the_branch_weights_exactly() {
    let flip = |m: Momentum| match m {
        Momentum::PlusK => Momentum::MinusK,
        Momentum::MinusK => Momentum::PlusK,
        Momentum::KA => Momentum::KA,
    };
    for &alpha in &[0.0, 0.3, 0.9, 1.0] {
        for &r in &[0.0, FRAC_PI_4 / 2.0, FRAC_PI_4] {
            for &phi in &[0.0, FRAC_PI_3] {
                let params = RindlerParams::new(alpha, r, phi).unwrap();
                let relabelled: Vec<(RobKet, Complex64)> = vacuum_state(&params)
                    .terms()
                    .map(|(ket, amp)| {
                        let i = ket.wedge_i();
                        let ii = ket.wedge_ii();
                        let swapped = RobKet::build(
                            (flip(i.tag().momentum()), i.occupation()),
                            (flip(ii.tag().momentum()), ii.occupation()),
                        )
                        .unwrap();
                        (swapped, amp)
                    })
                    .collect();
                let relabelled = StateVector::from_terms(relabelled).unwrap();
                assert_eq!(
                    relabelled,
                    vacuum_state(&params.with_swapped_weights()),
                    "relabelling failed at alpha={alpha} r={r} phi={phi}"
                );
            }
        }
    }
}

#[test]
fn mixing_angle_grows_with_acceleration_and_saturates() {
    let consts = PhysicalConstants::natural();
    let mut previous = -1.0;
    for i in 0..100 {
        let a = 0.01 + 100.0 * i as f64 / 99.0;
        let r = r_from_acceleration(&AccelerationSpec::new(a, 1.0).unwrap(), &consts);
        assert!(r > previous, "mixing angle must increase with acceleration");
        assert!((0.0..=FRAC_PI_4).contains(&r));
        previous = r;
    }
    let saturated = r_from_acceleration(&AccelerationSpec::new(1e12, 1.0).unwrap(), &consts);
    assert!((saturated - FRAC_PI_4).abs() < 1e-9, "got {saturated}");
    let inertial = r_from_acceleration(&AccelerationSpec::new(1e-6, 1.0).unwrap(), &consts);
    assert!(inertial < 1e-12, "got {inertial}");
}

#[test]
fn occupations_of_the_derived_states_follow_the_mixing_angle() {
    let both = [Momentum::PlusK, Momentum::MinusK];
    for params in dense_params() {
        let sin_sq = params.r().sin().powi(2);
        let vacuum_occ =
            occupation_expectation(&vacuum_state(&params), Region::RindlerI, &both).unwrap();
        assert!((vacuum_occ - sin_sq).abs() < 1e-12);

        let one_occ =
            occupation_expectation(&one_particle_state(&params), Region::RindlerI, &both).unwrap();
        assert!((one_occ - 1.0).abs() < 1e-12);

        let bell = bell_state(&params);
        let bell_occ = occupation_expectation(&bell, Region::RindlerI, &both).unwrap();
        assert!((bell_occ - 0.5 * (1.0 + sin_sq)).abs() < 1e-12);

        let alice_occ = occupation_expectation(&bell, Region::Alice, &[Momentum::KA]).unwrap();
        assert!((alice_occ - 0.5).abs() < 1e-12);
    }
}
