//! Exhaustive algebraic checks of the ladder operators over the full
//! 32-ket composite basis: exclusion, sector-projected anti-commutation,
//! cross-tag behaviour, linearity, and adjoint consistency.

mod common;

use common::SplitMix64;
use num_complex::Complex64;
use rindler_core::fock::{BasisKet, Ket, Ladder, LinearOperator, Momentum, Region, StateVector};

const WEDGES: [Region; 2] = [Region::RindlerI, Region::RindlerII];
const MOMENTA: [Momentum; 2] = [Momentum::PlusK, Momentum::MinusK];

/// Every wedge ladder operator: create and annihilate for each
/// (region, momentum) pair.
fn all_ladders() -> Vec<Ladder> {
    let mut ops = Vec::new();
    for region in WEDGES {
        for momentum in MOMENTA {
            ops.push(Ladder::create(region, momentum).unwrap());
            ops.push(Ladder::annihilate(region, momentum).unwrap());
        }
    }
    ops
}

fn anticommutator(a: &Ladder, b: &Ladder, state: &StateVector<BasisKet>) -> StateVector<BasisKet> {
    a.apply(&b.apply(state)).add(&b.apply(&a.apply(state)))
}

#[test]
fn double_application_annihilates_everything() {
    for op in all_ladders() {
        for ket in BasisKet::all() {
            let twice = op.apply(&op.apply(&StateVector::basis(ket)));
            assert!(
                twice.is_zero(),
                "{op:?} applied twice to {ket:?} should vanish"
            );
        }
    }
}

#[test]
fn matching_tag_anticommutator_is_the_identity_on_that_sector() {
    for region in WEDGES {
        for momentum in MOMENTA {
            let create = Ladder::create(region, momentum).unwrap();
            let annihilate = Ladder::annihilate(region, momentum).unwrap();
            for ket in BasisKet::all() {
                let state = StateVector::basis(ket);
                let result = anticommutator(&create, &annihilate, &state);
                let tag_matches = ket
                    .sector(region)
                    .expect("wedge sectors always present")
                    .tag()
                    .momentum()
                    == momentum;
                if tag_matches {
                    assert_eq!(
                        result, state,
                        "{{c, c+}} on a matching-tag ket must reproduce it ({region:?}, {momentum:?}, {ket:?})"
                    );
                } else {
                    assert!(
                        result.is_zero(),
                        "{{c, c+}} on an opposite-tag ket must vanish ({region:?}, {momentum:?}, {ket:?})"
                    );
                }
            }
        }
    }
}

#[test]
fn all_other_operator_pairs_anticommute_to_zero() {
    let ops = all_ladders();
    for a in &ops {
        for b in &ops {
            // the only nonzero anticommutator is {c_t, c+_t} on a matching
            // sector, i.e. same target with opposite actions
            if a.target() == b.target() && a.action() != b.action() {
                continue;
            }
            for ket in BasisKet::all() {
                let result = anticommutator(a, b, &StateVector::basis(ket));
                assert!(
                    result.is_zero(),
                    "{{ {a:?}, {b:?} }} should vanish on {ket:?}"
                );
            }
        }
    }
}

#[test]
fn cross_tag_application_yields_zero() {
    for op in all_ladders() {
        let region = op.target().region();
        let momentum = op.target().momentum();
        for ket in BasisKet::all() {
            let sector_tag = ket.sector(region).unwrap().tag();
            if sector_tag.momentum() != momentum {
                assert!(
                    op.apply(&StateVector::basis(ket)).is_zero(),
                    "{op:?} must vanish on mismatched tag of {ket:?}"
                );
            }
        }
    }
}

#[test]
fn ladder_construction_rejects_alice() {
    assert!(Ladder::create(Region::Alice, Momentum::KA).is_err());
    assert!(Ladder::annihilate(Region::Alice, Momentum::KA).is_err());
}

#[test]
fn operators_are_linear_over_basis_pairs() {
    let a = Complex64::new(0.3, -0.7);
    let b = Complex64::new(-1.1, 0.2);
    let composite = LinearOperator::new(vec![
        (
            Complex64::new(0.8, 0.0),
            vec![Ladder::create(Region::RindlerI, Momentum::PlusK).unwrap()],
        ),
        (
            Complex64::new(0.0, -0.6),
            vec![
                Ladder::create(Region::RindlerII, Momentum::MinusK).unwrap(),
                Ladder::annihilate(Region::RindlerI, Momentum::MinusK).unwrap(),
            ],
        ),
    ]);
    let kets = BasisKet::all();
    for &u in &kets {
        for &v in &kets {
            if u == v {
                continue;
            }
            let su = StateVector::basis(u);
            let sv = StateVector::basis(v);
            let combined = composite.apply(&su.scale(a).add(&sv.scale(b)));
            let separate = composite
                .apply(&su)
                .scale(a)
                .add(&composite.apply(&sv).scale(b));
            let diff = combined.add(&separate.scale(Complex64::new(-1.0, 0.0)));
            assert!(
                diff.norm() < 1e-15,
                "linearity violated on ({u:?}, {v:?}): residual {}",
                diff.norm()
            );
        }
    }
}

#[test]
fn create_and_annihilate_are_adjoint_across_all_basis_pairs() {
    let kets = BasisKet::all();
    for region in WEDGES {
        for momentum in MOMENTA {
            let create = Ladder::create(region, momentum).unwrap();
            let annihilate = Ladder::annihilate(region, momentum).unwrap();
            for &u in &kets {
                for &v in &kets {
                    let su = StateVector::basis(u);
                    let sv = StateVector::basis(v);
                    // <c+ u, v> = <u, c v>, amplitudes are exact signs
                    assert_eq!(
                        create.apply(&su).inner(&sv),
                        su.inner(&annihilate.apply(&sv)),
                        "adjoint mismatch for ({region:?}, {momentum:?}) on ({u:?}, {v:?})"
                    );
                }
            }
        }
    }
}

#[test]
fn composite_operator_adjoint_matches_inner_product_transfer() {
    let mut rng = SplitMix64::new(0x5EED_F0C4);
    let op = LinearOperator::new(vec![
        (
            Complex64::new(0.4, 0.9),
            vec![
                Ladder::create(Region::RindlerI, Momentum::PlusK).unwrap(),
                Ladder::annihilate(Region::RindlerII, Momentum::MinusK).unwrap(),
            ],
        ),
        (
            Complex64::new(-0.2, 0.1),
            vec![Ladder::annihilate(Region::RindlerI, Momentum::MinusK).unwrap()],
        ),
    ]);
    let adjoint = op.adjoint();
    for _ in 0..25 {
        let u = common::random_pure_state(&mut rng);
        let v = common::random_pure_state(&mut rng);
        let lhs = op.apply(&u).inner(&v);
        let rhs = u.inner(&adjoint.apply(&v));
        assert!(
            (lhs - rhs).norm() < 1e-12,
            "adjoint transfer failed: {lhs} vs {rhs}"
        );
    }
}

#[test]
fn adjoint_of_adjoint_is_the_original() {
    let op = LinearOperator::new(vec![(
        Complex64::new(0.4, 0.9),
        vec![
            Ladder::create(Region::RindlerI, Momentum::PlusK).unwrap(),
            Ladder::annihilate(Region::RindlerII, Momentum::MinusK).unwrap(),
        ],
    )]);
    let twice = op.adjoint().adjoint();
    let mut rng = SplitMix64::new(0xA11CE5);
    for _ in 0..10 {
        let state = common::random_pure_state(&mut rng);
        let diff = op
            .apply(&state)
            .add(&twice.apply(&state).scale(Complex64::new(-1.0, 0.0)));
        assert!(diff.norm() < 1e-15);
    }
}
