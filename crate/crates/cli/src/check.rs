//! Runtime self-checks: every library invariant, re-verified on the
//! default grids in a fresh process. `rindler check` prints one line per
//! suite and fails (exit 1) on the first broken invariant, quoting the
//! offending values.
//!
//! All "random" inputs come from a fixed-seed splitmix64 stream, so the
//! command is deterministic run to run.

use rindler_core::density::{DensityMatrix, PSD_FLOOR};
use rindler_core::fock::{BasisKet, Ket, Ladder, LinearOperator, Momentum, Region, StateVector};
use rindler_core::measures::{
    alice_rob_density, binary_entropy, closed_form_negativity, closed_form_spectrum, negativity,
    purity, report,
};
use rindler_core::unruh::{
    bell_state, fd_occupation, minkowski_creation_operator, occupation_expectation,
    one_particle_state, one_particle_state_closed_form, r_from_acceleration, unruh_temperature,
    vacuum_state, AccelerationSpec, PhysicalConstants, RindlerParams,
};
use rindler_core::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_8, PI};

/// One named suite and its outcome; `Err` carries the first failing
/// assertion's values.
pub struct SuiteOutcome {
    pub name: &'static str,
    pub result: Result<(), String>,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        // Written without `!` so float comparands keep their natural
        // direction (NaN falls through to the error branch).
        if $cond {
        } else {
            return Err(format!($($fmt)+));
        }
    };
}

const ALPHAS: [f64; 5] = [0.0, 0.3, FRAC_1_SQRT_2, 0.9, 1.0];
const PHIS: [f64; 3] = [0.0, FRAC_PI_3, PI];

fn rs() -> [f64; 5] {
    [
        0.0,
        FRAC_PI_8 / 2.0,
        FRAC_PI_8,
        3.0 * (FRAC_PI_8 / 2.0),
        FRAC_PI_4,
    ]
}

fn grid() -> Vec<RindlerParams> {
    let mut out = Vec::new();
    for &alpha in &ALPHAS {
        for &r in &rs() {
            for &phi in &PHIS {
                out.push(RindlerParams::new(alpha, r, phi).expect("grid is in range"));
            }
        }
    }
    out
}

struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn next_signed(&mut self) -> f64 {
        2.0 * ((self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)) - 1.0
    }

    fn next_complex(&mut self) -> Complex64 {
        Complex64::new(self.next_signed(), self.next_signed())
    }
}

fn random_hermitian(dim: usize, rng: &mut SplitMix64) -> DensityMatrix {
    let raw: Vec<Complex64> = (0..dim * dim).map(|_| rng.next_complex()).collect();
    let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            entries[i * dim + j] = (raw[i * dim + j] + raw[j * dim + i].conj()) * 0.5;
        }
    }
    DensityMatrix::from_entries(vec![dim], entries).expect("square buffer")
}

fn random_pure_state(rng: &mut SplitMix64) -> StateVector<BasisKet> {
    let terms: Vec<(BasisKet, Complex64)> = BasisKet::all()
        .into_iter()
        .map(|k| (k, rng.next_complex()))
        .collect();
    StateVector::from_terms(terms)
        .expect("finite amplitudes")
        .normalize()
        .expect("nonzero norm")
}

fn hermiticity_deviation(m: &DensityMatrix) -> f64 {
    let n = m.dim();
    let mut max = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            max = max.max((m.entry(i, j) - m.entry(j, i).conj()).norm());
        }
    }
    max
}

fn wedge_ladders() -> Vec<Ladder> {
    let mut out = Vec::new();
    for region in [Region::RindlerI, Region::RindlerII] {
        for momentum in [Momentum::PlusK, Momentum::MinusK] {
            out.push(Ladder::create(region, momentum).expect("wedge tag"));
            out.push(Ladder::annihilate(region, momentum).expect("wedge tag"));
        }
    }
    out
}

fn ladder_exclusion() -> Result<(), String> {
    for op in wedge_ladders() {
        for ket in BasisKet::all() {
            let twice = op.apply(&op.apply(&StateVector::basis(ket)));
            ensure!(
                twice.is_zero(),
                "double {op:?} on {ket:?} left norm {}",
                twice.norm()
            );
        }
    }
    Ok(())
}

fn sector_anticommutation() -> Result<(), String> {
    let ops = wedge_ladders();
    for a in &ops {
        for b in &ops {
            let matching = a.target() == b.target() && a.action() != b.action();
            for ket in BasisKet::all() {
                let state = StateVector::basis(ket);
                let anti = a.apply(&b.apply(&state)).add(&b.apply(&a.apply(&state)));
                if matching
                    && ket.sector(a.target().region()).expect("wedge sector").tag() == a.target()
                {
                    ensure!(
                        anti == state,
                        "{{ {a:?}, {b:?} }} failed to act as identity on {ket:?}"
                    );
                } else {
                    ensure!(
                        anti.is_zero(),
                        "{{ {a:?}, {b:?} }} left norm {} on {ket:?}",
                        anti.norm()
                    );
                }
            }
        }
    }
    Ok(())
}

fn cross_tag_nilpotence() -> Result<(), String> {
    for op in wedge_ladders() {
        for ket in BasisKet::all() {
            let sector = ket.sector(op.target().region()).expect("wedge sector");
            if sector.tag().momentum() != op.target().momentum() {
                let out = op.apply(&StateVector::basis(ket));
                ensure!(
                    out.is_zero(),
                    "{op:?} on mismatched tag of {ket:?} left norm {}",
                    out.norm()
                );
            }
        }
    }
    Ok(())
}

fn operator_linearity() -> Result<(), String> {
    let a = Complex64::new(0.3, -0.7);
    let b = Complex64::new(-1.1, 0.2);
    let op = LinearOperator::new(vec![
        (
            Complex64::new(0.8, 0.0),
            vec![Ladder::create(Region::RindlerI, Momentum::PlusK).expect("tag")],
        ),
        (
            Complex64::new(0.0, -0.6),
            vec![
                Ladder::create(Region::RindlerII, Momentum::MinusK).expect("tag"),
                Ladder::annihilate(Region::RindlerI, Momentum::MinusK).expect("tag"),
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
            let joint = op.apply(&su.scale(a).add(&sv.scale(b)));
            let split = op.apply(&su).scale(a).add(&op.apply(&sv).scale(b));
            let diff = joint.add(&split.scale(Complex64::new(-1.0, 0.0))).norm();
            ensure!(
                diff < 1e-15,
                "linearity residual {diff:e} on ({u:?}, {v:?})"
            );
        }
    }
    Ok(())
}

fn adjoint_consistency() -> Result<(), String> {
    let kets = BasisKet::all();
    for region in [Region::RindlerI, Region::RindlerII] {
        for momentum in [Momentum::PlusK, Momentum::MinusK] {
            let create = Ladder::create(region, momentum).expect("tag");
            let annihilate = Ladder::annihilate(region, momentum).expect("tag");
            for &u in &kets {
                for &v in &kets {
                    let su = StateVector::basis(u);
                    let sv = StateVector::basis(v);
                    let lhs = create.apply(&su).inner(&sv);
                    let rhs = su.inner(&annihilate.apply(&sv));
                    ensure!(
                        lhs == rhs,
                        "adjoint transfer {lhs} vs {rhs} at ({region:?}, {momentum:?}, {u:?}, {v:?})"
                    );
                }
            }
        }
    }
    Ok(())
}

fn vacuum_annihilation() -> Result<(), String> {
    for params in grid() {
        let residual = minkowski_creation_operator(&params)
            .adjoint()
            .apply(&vacuum_state(&params))
            .norm();
        ensure!(
            residual < 1e-12,
            "vacuum survived annihilation at alpha={} r={} phi={}: norm {residual:e}",
            params.alpha(),
            params.r(),
            params.phi()
        );
    }
    Ok(())
}

fn thermality() -> Result<(), String> {
    let consts = PhysicalConstants::natural();
    for &a in &[0.5, 1.0, PI, 10.0, 100.0] {
        let spec = AccelerationSpec::new(a, 1.0).expect("positive");
        let r = r_from_acceleration(&spec, &consts);
        let occupation = fd_occupation(r).map_err(|e| e.to_string())?;
        let temperature = unruh_temperature(a, &consts).map_err(|e| e.to_string())?;
        let boltzmann = 1.0 / ((1.0 / temperature).exp() + 1.0);
        ensure!(
            (occupation - boltzmann).abs() < 1e-12,
            "thermality broke at a={a}: {occupation} vs {boltzmann}"
        );

        let params = RindlerParams::new(1.0, r, 0.0).map_err(|e| e.to_string())?;
        let state_occ = occupation_expectation(
            &vacuum_state(&params),
            Region::RindlerI,
            &[Momentum::PlusK, Momentum::MinusK],
        )
        .map_err(|e| e.to_string())?;
        ensure!(
            (state_occ - occupation).abs() < 1e-12,
            "state occupation {state_occ} differs from sin^2 r {occupation} at a={a}"
        );
    }
    Ok(())
}

fn operator_route_vs_closed_form() -> Result<(), String> {
    for params in grid() {
        let diff = one_particle_state(&params)
            .add(&one_particle_state_closed_form(&params).scale(Complex64::new(-1.0, 0.0)))
            .norm();
        ensure!(
            diff < 1e-12,
            "one-particle routes differ by {diff:e} at alpha={} r={} phi={}",
            params.alpha(),
            params.r(),
            params.phi()
        );
    }
    Ok(())
}

fn state_norms() -> Result<(), String> {
    for params in grid() {
        for (name, norm) in [
            ("vacuum", vacuum_state(&params).norm()),
            ("one-particle", one_particle_state(&params).norm()),
            ("bell", bell_state(&params).norm()),
        ] {
            ensure!(
                (norm - 1.0).abs() < 1e-12,
                "{name} norm {norm} at alpha={} r={} phi={}",
                params.alpha(),
                params.r(),
                params.phi()
            );
        }
    }
    Ok(())
}

fn momentum_relabel_symmetry() -> Result<(), String> {
    let flip = |m: Momentum| match m {
        Momentum::PlusK => Momentum::MinusK,
        Momentum::MinusK => Momentum::PlusK,
        Momentum::KA => Momentum::KA,
    };
    for params in grid() {
        let relabelled: Result<Vec<_>, _> = vacuum_state(&params)
            .terms()
            .map(|(ket, amp)| {
                let i = ket.wedge_i();
                let ii = ket.wedge_ii();
                rindler_core::fock::RobKet::build(
                    (flip(i.tag().momentum()), i.occupation()),
                    (flip(ii.tag().momentum()), ii.occupation()),
                )
                .map(|k| (k, amp))
            })
            .collect();
        let relabelled = StateVector::from_terms(relabelled.map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let swapped = vacuum_state(&params.with_swapped_weights());
        ensure!(
            relabelled == swapped,
            "momentum relabelling failed at alpha={} r={} phi={}",
            params.alpha(),
            params.r(),
            params.phi()
        );
    }
    Ok(())
}

fn reduction_trace_preservation() -> Result<(), String> {
    let mut rng = SplitMix64::new(0x0C11_EC4A);
    let keeps: [&[usize]; 6] = [&[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]];
    for _ in 0..8 {
        let rho =
            DensityMatrix::from_pure(&random_pure_state(&mut rng)).map_err(|e| e.to_string())?;
        for keep in keeps {
            let reduced = rho.partial_trace(keep).map_err(|e| e.to_string())?;
            let drift = (reduced.trace() - rho.trace()).norm();
            ensure!(drift < 1e-12, "trace drifted {drift:e} for keep={keep:?}");
        }
    }
    Ok(())
}

fn hermiticity_closure() -> Result<(), String> {
    let mut rng = SplitMix64::new(0x4E_2A17);
    for _ in 0..8 {
        let rho =
            DensityMatrix::from_pure(&random_pure_state(&mut rng)).map_err(|e| e.to_string())?;
        ensure!(
            hermiticity_deviation(&rho) < 1e-12,
            "projector hermiticity {:e}",
            hermiticity_deviation(&rho)
        );
        let reduced = rho.partial_trace(&[0, 1]).map_err(|e| e.to_string())?;
        ensure!(
            hermiticity_deviation(&reduced) < 1e-12,
            "partial-trace hermiticity {:e}",
            hermiticity_deviation(&reduced)
        );
        let transposed = reduced.partial_transpose(0).map_err(|e| e.to_string())?;
        ensure!(
            hermiticity_deviation(&transposed) < 1e-12,
            "partial-transpose hermiticity {:e}",
            hermiticity_deviation(&transposed)
        );
    }
    Ok(())
}

fn eigensolver_quality() -> Result<(), String> {
    let mut rng = SplitMix64::new(0xE16E_501A);
    for &dim in &[2usize, 4, 8, 16, 32] {
        for matrix_index in 0..20 {
            let matrix = random_hermitian(dim, &mut rng);
            let spectrum = matrix.eigenvalues_hermitian().map_err(|e| e.to_string())?;
            ensure!(
                spectrum.max_residual() < 1e-10,
                "residual {:e} on matrix {matrix_index} of dim {dim}",
                spectrum.max_residual()
            );
            let eigen_sum: f64 = spectrum.eigenvalues().iter().sum();
            let trace = matrix.trace().re;
            ensure!(
                (eigen_sum - trace).abs() < 1e-10,
                "eigenvalue sum {eigen_sum} vs trace {trace} (dim {dim})"
            );
            let square_sum: f64 = spectrum.eigenvalues().iter().map(|l| l * l).sum();
            let frobenius: f64 = matrix.entries().iter().map(|z| z.norm_sqr()).sum();
            ensure!(
                (square_sum - frobenius).abs() < 1e-9,
                "square sum {square_sum} vs Frobenius {frobenius} (dim {dim})"
            );
        }
    }
    Ok(())
}

fn pure_state_purity() -> Result<(), String> {
    let mut rng = SplitMix64::new(0x9B_51A7E);
    for _ in 0..10 {
        let rho =
            DensityMatrix::from_pure(&random_pure_state(&mut rng)).map_err(|e| e.to_string())?;
        let value = purity(&rho);
        ensure!((value - 1.0).abs() < 1e-10, "pure-state purity {value}");
    }
    Ok(())
}

fn complementarity() -> Result<(), String> {
    let nonzero = |m: &DensityMatrix| -> Result<Vec<f64>, String> {
        Ok(m.eigenvalues_hermitian()
            .map_err(|e| e.to_string())?
            .eigenvalues()
            .iter()
            .copied()
            .filter(|&l| l > 1e-10)
            .collect())
    };
    let mut rng = SplitMix64::new(0xC0_77E17);
    let mut states: Vec<StateVector<BasisKet>> =
        (0..6).map(|_| random_pure_state(&mut rng)).collect();
    for params in [
        RindlerParams::new(0.3, FRAC_PI_8, FRAC_PI_3).expect("in range"),
        RindlerParams::new(1.0, FRAC_PI_4, 0.0).expect("in range"),
    ] {
        states.push(bell_state(&params));
    }
    for state in &states {
        let rho = DensityMatrix::from_pure(state).map_err(|e| e.to_string())?;
        let wedge_ii = nonzero(&rho.partial_trace(&[2]).map_err(|e| e.to_string())?)?;
        let alice_i = nonzero(&rho.partial_trace(&[0, 1]).map_err(|e| e.to_string())?)?;
        ensure!(
            wedge_ii.len() == alice_i.len(),
            "rank mismatch {wedge_ii:?} vs {alice_i:?}"
        );
        for (a, b) in wedge_ii.iter().zip(&alice_i) {
            ensure!((a - b).abs() < 1e-10, "complementary spectra {a} vs {b}");
        }
    }
    Ok(())
}

fn spectrum_oracle() -> Result<(), String> {
    for params in grid() {
        let numerical = alice_rob_density(&params)
            .map_err(|e| e.to_string())?
            .eigenvalues_hermitian()
            .map_err(|e| e.to_string())?;
        for (have, want) in numerical
            .eigenvalues()
            .iter()
            .zip(closed_form_spectrum(&params))
        {
            ensure!(
                (have - want).abs() < 1e-9,
                "spectrum {have} vs {want} at alpha={} r={} phi={}",
                params.alpha(),
                params.r(),
                params.phi()
            );
        }
    }
    Ok(())
}

fn negativity_oracle() -> Result<(), String> {
    for params in grid() {
        let rho = alice_rob_density(&params).map_err(|e| e.to_string())?;
        let have = negativity(&rho, 0).map_err(|e| e.to_string())?;
        let want = closed_form_negativity(params.r());
        ensure!(
            (have - want).abs() < 1e-9,
            "negativity {have} vs {want} at alpha={} r={} phi={}",
            params.alpha(),
            params.r(),
            params.phi()
        );
    }
    Ok(())
}

fn transpose_negative_pair() -> Result<(), String> {
    for &alpha in &ALPHAS {
        for &r in &rs() {
            let params = RindlerParams::new(alpha, r, 0.0).expect("in range");
            let transposed = alice_rob_density(&params)
                .map_err(|e| e.to_string())?
                .partial_transpose(0)
                .map_err(|e| e.to_string())?;
            let mut negatives: Vec<f64> = transposed
                .eigenvalues_hermitian()
                .map_err(|e| e.to_string())?
                .eigenvalues()
                .iter()
                .copied()
                .filter(|&l| l < PSD_FLOOR)
                .collect();
            negatives.sort_by(|a, b| a.partial_cmp(b).expect("finite"));

            let scale = (1.0 + (2.0 * r).cos()) / 4.0;
            let mut expected: Vec<f64> =
                [-((1.0 - alpha * alpha) * scale), -(alpha * alpha * scale)]
                    .into_iter()
                    .filter(|&l| l < PSD_FLOOR)
                    .collect();
            expected.sort_by(|a, b| a.partial_cmp(b).expect("finite"));

            ensure!(
                negatives.len() == expected.len(),
                "negative count {negatives:?} vs {expected:?} at alpha={alpha} r={r}"
            );
            for (have, want) in negatives.iter().zip(&expected) {
                ensure!(
                    (have - want).abs() < 1e-9,
                    "transpose eigenvalue {have} vs {want} at alpha={alpha} r={r}"
                );
            }
        }
    }
    Ok(())
}

fn entropy_decomposition() -> Result<(), String> {
    for &r in &rs() {
        let single = report(&RindlerParams::new(1.0, r, 0.0).expect("in range"))
            .map_err(|e| e.to_string())?
            .entropy;
        let mut best = (f64::NEG_INFINITY, f64::NAN);
        for &alpha in &ALPHAS {
            let entropy = report(&RindlerParams::new(alpha, r, 0.0).expect("in range"))
                .map_err(|e| e.to_string())?
                .entropy;
            let predicted = single + binary_entropy(alpha * alpha).map_err(|e| e.to_string())?;
            ensure!(
                (entropy - predicted).abs() < 1e-9,
                "entropy {entropy} vs decomposition {predicted} at alpha={alpha} r={r}"
            );
            if entropy > best.0 {
                best = (entropy, alpha);
            }
        }
        ensure!(
            (best.1 - FRAC_1_SQRT_2).abs() < 1e-12,
            "entropy peaked at alpha={} instead of the balanced weight (r={r})",
            best.1
        );
    }
    Ok(())
}

fn coherence_alpha_invariance() -> Result<(), String> {
    for &r in &rs() {
        let reference = report(&RindlerParams::new(ALPHAS[0], r, 0.0).expect("in range"))
            .map_err(|e| e.to_string())?
            .coherence;
        for &alpha in &ALPHAS[1..] {
            let coherence = report(&RindlerParams::new(alpha, r, 0.0).expect("in range"))
                .map_err(|e| e.to_string())?
                .coherence;
            ensure!(
                (coherence - reference).abs() < 1e-9,
                "coherence {coherence} vs {reference} at alpha={alpha} r={r}"
            );
        }
    }
    Ok(())
}

fn phase_invariance() -> Result<(), String> {
    for &alpha in &ALPHAS {
        for &r in &rs() {
            let base = report(&RindlerParams::new(alpha, r, PHIS[0]).expect("in range"))
                .map_err(|e| e.to_string())?;
            for &phi in &PHIS[1..] {
                let other = report(&RindlerParams::new(alpha, r, phi).expect("in range"))
                    .map_err(|e| e.to_string())?;
                for (name, a, b) in [
                    ("entropy", base.entropy, other.entropy),
                    ("negativity", base.negativity, other.negativity),
                    ("purity", base.purity, other.purity),
                    ("coherence", base.coherence, other.coherence),
                ] {
                    ensure!(
                        (a - b).abs() < 1e-10,
                        "{name} moved with phase: {a} vs {b} at alpha={alpha} r={r} phi={phi}"
                    );
                }
            }
        }
    }
    Ok(())
}

fn measure_monotonicity() -> Result<(), String> {
    let mut previous: Option<(f64, f64, f64, f64)> = None;
    for i in 0..100 {
        let r = FRAC_PI_4 * (i as f64 / 99.0);
        let rep = report(&RindlerParams::new(1.0, r, 0.0).expect("in range"))
            .map_err(|e| e.to_string())?;
        if let Some((pr, entropy, neg, coherence)) = previous {
            ensure!(
                rep.entropy >= entropy - 1e-12,
                "entropy fell from {entropy} to {} between r={pr} and r={r}",
                rep.entropy
            );
            ensure!(
                rep.negativity < neg,
                "negativity failed to strictly fall ({neg} -> {}) between r={pr} and r={r}",
                rep.negativity
            );
            ensure!(
                rep.coherence <= coherence + 1e-10,
                "coherence rose from {coherence} to {} between r={pr} and r={r}",
                rep.coherence
            );
        }
        previous = Some((r, rep.entropy, rep.negativity, rep.coherence));
    }
    Ok(())
}

fn purity_floor() -> Result<(), String> {
    for params in grid() {
        let value = report(&params).map_err(|e| e.to_string())?.purity;
        ensure!(
            (0.125 - 1e-12..=1.0 + 1e-12).contains(&value),
            "purity {value} outside [1/8, 1] at alpha={} r={}",
            params.alpha(),
            params.r()
        );
    }
    let pure = report(&RindlerParams::new(1.0, 0.0, 0.0).expect("in range"))
        .map_err(|e| e.to_string())?
        .purity;
    ensure!((pure - 1.0).abs() < 1e-12, "pure-point purity {pure}");
    Ok(())
}

fn sweep_determinism() -> Result<(), String> {
    use crate::config::{parse_measures, resolve, OutputFormat, PartialConfig};
    use crate::output::{evaluate_rows, render};
    for format in [OutputFormat::Csv, OutputFormat::Json] {
        let cfg = resolve(PartialConfig {
            alphas: Some(vec![0.0, FRAC_1_SQRT_2, 1.0]),
            steps: Some(11),
            measures: Some(parse_measures("entropy,negativity,occupation").expect("known")),
            format: Some(format),
            ..PartialConfig::default()
        })
        .map_err(|e| e.to_string())?;
        let once = render(&cfg, &evaluate_rows(&cfg).map_err(|e| e.to_string())?);
        let twice = render(&cfg, &evaluate_rows(&cfg).map_err(|e| e.to_string())?);
        ensure!(
            once == twice,
            "repeated {format} sweeps differ ({} vs {} bytes)",
            once.len(),
            twice.len()
        );
    }
    Ok(())
}

fn sweep_rows_complete_and_finite() -> Result<(), String> {
    use crate::config::{resolve, PartialConfig};
    use crate::output::evaluate_rows;
    let cfg = resolve(PartialConfig {
        alphas: Some(vec![0.0, 0.5, 1.0]),
        steps: Some(13),
        ..PartialConfig::default()
    })
    .map_err(|e| e.to_string())?;
    let rows = evaluate_rows(&cfg).map_err(|e| e.to_string())?;
    ensure!(
        rows.len() == cfg.alphas.len() * cfg.steps,
        "expected {} rows, got {}",
        cfg.alphas.len() * cfg.steps,
        rows.len()
    );
    for row in &rows {
        for measure in &cfg.measures {
            let value = row
                .value(measure)
                .ok_or_else(|| format!("missing {measure} at alpha={} r={}", row.alpha, row.r))?;
            ensure!(
                value.is_finite(),
                "non-finite {measure}={value} at alpha={} r={}",
                row.alpha,
                row.r
            );
        }
    }
    Ok(())
}

type Suite = fn() -> Result<(), String>;

/// Every suite in execution order.
pub const SUITES: [(&str, Suite); 25] = [
    ("ladder_exclusion", ladder_exclusion),
    ("sector_anticommutation", sector_anticommutation),
    ("cross_tag_nilpotence", cross_tag_nilpotence),
    ("operator_linearity", operator_linearity),
    ("adjoint_consistency", adjoint_consistency),
    ("vacuum_annihilation", vacuum_annihilation),
    ("thermality", thermality),
    (
        "operator_route_vs_closed_form",
        operator_route_vs_closed_form,
    ),
    ("state_norms", state_norms),
    ("momentum_relabel_symmetry", momentum_relabel_symmetry),
    ("reduction_trace_preservation", reduction_trace_preservation),
    ("hermiticity_closure", hermiticity_closure),
    ("eigensolver_quality", eigensolver_quality),
    ("pure_state_purity", pure_state_purity),
    ("complementarity", complementarity),
    ("spectrum_oracle", spectrum_oracle),
    ("negativity_oracle", negativity_oracle),
    ("transpose_negative_pair", transpose_negative_pair),
    ("entropy_decomposition", entropy_decomposition),
    ("coherence_alpha_invariance", coherence_alpha_invariance),
    ("phase_invariance", phase_invariance),
    ("measure_monotonicity", measure_monotonicity),
    ("purity_floor", purity_floor),
    ("sweep_determinism", sweep_determinism),
    (
        "sweep_rows_complete_and_finite",
        sweep_rows_complete_and_finite,
    ),
];

/// Runs every suite in table order.
pub fn run_all_suites() -> Vec<SuiteOutcome> {
    SUITES
        .iter()
        .map(|(name, suite)| SuiteOutcome {
            name,
            result: suite(),
        })
        .collect()
}
