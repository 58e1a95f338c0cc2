//! Sector-tagged Fock space for one inertial observer and the two Rindler
//! wedges seen by a uniformly accelerated observer.
//!
//! A single Minkowski mode of momentum `k` mixes, for the accelerated
//! observer, wedge-I particle modes with momenta `{+k, -k}` and wedge-II
//! antiparticle modes with the opposite labels. Only the zero- and
//! one-excitation sectors of each momentum ever appear, so the bookkeeping
//! is done in a small tagged basis instead of a full multimode Fock space:
//!
//! * Alice's Minkowski mode is an ordinary qubit, occupation 0 or 1;
//! * each wedge is a four-dimensional space whose basis kets carry a
//!   momentum tag and an occupation, `(q, n)` with `q in {+k, -k}` and
//!   `n in {0, 1}`, all four treated as orthonormal.
//!
//! The full space is `2 x 4 x 4 = 32` dimensional with the canonical
//! ordering: Alice slowest, then wedge I as `0_k, 0_-k, 1_k, 1_-k`, then
//! wedge II with the same pattern.
//!
//! Ladder operators act within a matching momentum tag and send kets whose
//! tag differs to zero. Within one sector `{c, c^dag}` therefore acts as the
//! identity, while across sectors it acts as zero: the anticommutator is a
//! projector onto the tagged sector rather than the identity of the whole
//! wedge space. That is the price of the tagged representation, and the
//! property tests assert exactly this behaviour.
//!
//! Fermionic exchange signs use the fixed subsystem order wedge I < wedge II:
//! an operator acting on wedge II picks up `(-1)^n`, `n` being the wedge-I
//! occupation of the ket it acts on. Alice's mode is distinguishable, never
//! enters the sign string, and is never acted on by ladder operators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_complex::Complex64;

use crate::flt;

/// Amplitudes with magnitude below this are dropped from sparse states.
pub const AMPLITUDE_PRUNE_THRESHOLD: f64 = 1e-15;

/// Norms at or below this are treated as a degenerate (zero) state.
pub const NORM_FLOOR: f64 = 1e-12;

/// Subsystem holding a mode: Alice's Minkowski qubit or one Rindler wedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    /// The inertial observer's qubit.
    Alice,
    /// Rindler wedge I (particle modes).
    RindlerI,
    /// Rindler wedge II (antiparticle modes).
    RindlerII,
}

impl Region {
    /// Dimension of the subsystem: 2 for Alice, 4 per wedge.
    pub fn dimension(self) -> usize {
        match self {
            Region::Alice => 2,
            Region::RindlerI | Region::RindlerII => 4,
        }
    }

    /// Basis labels in canonical order.
    pub fn basis_labels(self) -> &'static [&'static str] {
        match self {
            Region::Alice => &["0_A", "1_A"],
            Region::RindlerI | Region::RindlerII => &["0_k", "0_-k", "1_k", "1_-k"],
        }
    }
}

/// Momentum tag of a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Momentum {
    /// `+k`, the Minkowski momentum shared with Alice's mode.
    PlusK,
    /// `-k`, its wedge partner.
    MinusK,
    /// Alice's dedicated Minkowski mode.
    KA,
}

impl Momentum {
    fn bit(self) -> usize {
        match self {
            Momentum::PlusK => 0,
            Momentum::MinusK => 1,
            Momentum::KA => 0,
        }
    }
}

/// Particle species of a mode. Wedge-II modes are antiparticle modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Species {
    Particle,
    Antiparticle,
}

/// Errors from constructing or manipulating Fock-space values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FockError {
    /// The (region, momentum, species) combination does not label a mode.
    InvalidTag {
        region: Region,
        momentum: Momentum,
        species: Species,
    },
    /// Occupation numbers are restricted to 0 and 1.
    InvalidOccupation(u8),
    /// A ket slot received a sector tagged for a different subsystem.
    WrongSlot { expected: Region, found: Region },
    /// Ladder operators never act on Alice's mode.
    LadderOnAlice,
    /// Amplitudes must be finite.
    NonFiniteAmplitude,
    /// The state's norm is at or below [`NORM_FLOOR`].
    VanishingNorm { norm: f64 },
}

impl fmt::Display for FockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockError::InvalidTag {
                region,
                momentum,
                species,
            } => write!(
                f,
                "no mode with region {region:?}, momentum {momentum:?}, species {species:?}"
            ),
            FockError::InvalidOccupation(n) => {
                write!(f, "occupation must be 0 or 1, got {n}")
            }
            FockError::WrongSlot { expected, found } => {
                write!(f, "ket slot for {expected:?} received a {found:?} sector")
            }
            FockError::LadderOnAlice => {
                write!(f, "ladder operators act only on wedge modes, not Alice's")
            }
            FockError::NonFiniteAmplitude => write!(f, "amplitudes must be finite"),
            FockError::VanishingNorm { norm } => {
                write!(f, "cannot normalize a state of norm {norm:e}")
            }
        }
    }
}

impl core::error::Error for FockError {}

/// Identity of one mode: which subsystem it lives in, its momentum tag, and
/// its species.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModeTag {
    region: Region,
    momentum: Momentum,
    species: Species,
}

impl ModeTag {
    /// Validated constructor; rejects combinations that label no mode.
    pub fn new(region: Region, momentum: Momentum, species: Species) -> Result<Self, FockError> {
        let valid = match region {
            Region::Alice => momentum == Momentum::KA && species == Species::Particle,
            Region::RindlerI => momentum != Momentum::KA && species == Species::Particle,
            Region::RindlerII => momentum != Momentum::KA && species == Species::Antiparticle,
        };
        if valid {
            Ok(ModeTag {
                region,
                momentum,
                species,
            })
        } else {
            Err(FockError::InvalidTag {
                region,
                momentum,
                species,
            })
        }
    }

    /// Alice's Minkowski mode.
    pub fn alice() -> Self {
        ModeTag {
            region: Region::Alice,
            momentum: Momentum::KA,
            species: Species::Particle,
        }
    }

    /// A wedge-I particle mode of momentum `q in {+k, -k}`.
    pub fn wedge_i(momentum: Momentum) -> Result<Self, FockError> {
        ModeTag::new(Region::RindlerI, momentum, Species::Particle)
    }

    /// A wedge-II antiparticle mode of momentum `q in {+k, -k}`.
    pub fn wedge_ii(momentum: Momentum) -> Result<Self, FockError> {
        ModeTag::new(Region::RindlerII, momentum, Species::Antiparticle)
    }

    pub fn region(&self) -> Region {
        self.region
    }

    pub fn momentum(&self) -> Momentum {
        self.momentum
    }

    pub fn species(&self) -> Species {
        self.species
    }
}

/// One subsystem slot of a basis ket: a mode tag plus its occupation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SectorLabel {
    tag: ModeTag,
    occupation: u8,
}

impl SectorLabel {
    pub fn new(tag: ModeTag, occupation: u8) -> Result<Self, FockError> {
        if occupation > 1 {
            return Err(FockError::InvalidOccupation(occupation));
        }
        Ok(SectorLabel { tag, occupation })
    }

    /// The unoccupied sector `(q, 0)`.
    pub fn empty(tag: ModeTag) -> Self {
        SectorLabel { tag, occupation: 0 }
    }

    /// The occupied sector `(q, 1)`.
    pub fn filled(tag: ModeTag) -> Self {
        SectorLabel { tag, occupation: 1 }
    }

    pub fn tag(&self) -> ModeTag {
        self.tag
    }

    pub fn occupation(&self) -> u8 {
        self.occupation
    }

    /// Position in the subsystem's canonical basis order.
    ///
    /// Alice: `0_A, 1_A`. Wedges: `0_k, 0_-k, 1_k, 1_-k` (occupation-major,
    /// `+k` before `-k`).
    pub fn slot_index(&self) -> usize {
        match self.tag.region {
            Region::Alice => self.occupation as usize,
            _ => 2 * self.occupation as usize + self.tag.momentum.bit(),
        }
    }

    /// Inverse of [`slot_index`](Self::slot_index) for a given subsystem.
    pub fn from_slot(region: Region, slot: usize) -> Option<Self> {
        if slot >= region.dimension() {
            return None;
        }
        let label = match region {
            Region::Alice => SectorLabel {
                tag: ModeTag::alice(),
                occupation: slot as u8,
            },
            Region::RindlerI | Region::RindlerII => {
                let momentum = if slot.is_multiple_of(2) {
                    Momentum::PlusK
                } else {
                    Momentum::MinusK
                };
                let species = if region == Region::RindlerI {
                    Species::Particle
                } else {
                    Species::Antiparticle
                };
                SectorLabel {
                    tag: ModeTag {
                        region,
                        momentum,
                        species,
                    },
                    occupation: (slot / 2) as u8,
                }
            }
        };
        Some(label)
    }
}

impl fmt::Display for SectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match (self.tag.region, self.tag.momentum) {
            (Region::Alice, _) => "A",
            (_, Momentum::PlusK) => "k",
            (_, Momentum::MinusK) => "-k",
            (_, Momentum::KA) => "A",
        };
        write!(f, "{}_{}", self.occupation, suffix)
    }
}

/// A basis ket of some fixed subsystem layout.
///
/// Implementations are plain labelled tuples; the trait lets states and
/// operators work uniformly on the wedge-only space ([`RobKet`]) and the full
/// Alice (x) wedge-I (x) wedge-II space ([`BasisKet`]).
pub trait Ket: Copy + Eq + Ord + fmt::Debug {
    /// Subsystem factors in canonical order, slowest index first.
    const LAYOUT: &'static [Region];

    /// The sector occupying `region`'s slot, if the layout has one.
    fn sector(&self, region: Region) -> Option<SectorLabel>;

    /// Replaces the slot matching `sector`'s region.
    ///
    /// Panics if the layout lacks that region; ladder application guards
    /// this by construction.
    fn with_sector(&self, sector: SectorLabel) -> Self;

    /// Row/column index in the canonical product-basis ordering.
    fn canonical_index(&self) -> usize;
}

/// Basis ket of the two-wedge space seen by the accelerated observer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RobKet {
    wedge_i: SectorLabel,
    wedge_ii: SectorLabel,
}

impl RobKet {
    pub fn new(wedge_i: SectorLabel, wedge_ii: SectorLabel) -> Result<Self, FockError> {
        check_slot(Region::RindlerI, &wedge_i)?;
        check_slot(Region::RindlerII, &wedge_ii)?;
        Ok(RobKet { wedge_i, wedge_ii })
    }

    /// Shorthand: `RobKet::build((PlusK, 1), (MinusK, 0))` is `|1_k, 0_-k>`.
    pub fn build(i: (Momentum, u8), ii: (Momentum, u8)) -> Result<Self, FockError> {
        RobKet::new(
            SectorLabel::new(ModeTag::wedge_i(i.0)?, i.1)?,
            SectorLabel::new(ModeTag::wedge_ii(ii.0)?, ii.1)?,
        )
    }

    pub fn wedge_i(&self) -> SectorLabel {
        self.wedge_i
    }

    pub fn wedge_ii(&self) -> SectorLabel {
        self.wedge_ii
    }

    /// All 16 kets in canonical order.
    pub fn all() -> Vec<RobKet> {
        let mut kets = Vec::with_capacity(16);
        for i in 0..4 {
            for ii in 0..4 {
                kets.push(RobKet {
                    wedge_i: SectorLabel::from_slot(Region::RindlerI, i).unwrap(),
                    wedge_ii: SectorLabel::from_slot(Region::RindlerII, ii).unwrap(),
                });
            }
        }
        kets
    }
}

impl Ket for RobKet {
    const LAYOUT: &'static [Region] = &[Region::RindlerI, Region::RindlerII];

    fn sector(&self, region: Region) -> Option<SectorLabel> {
        match region {
            Region::RindlerI => Some(self.wedge_i),
            Region::RindlerII => Some(self.wedge_ii),
            Region::Alice => None,
        }
    }

    fn with_sector(&self, sector: SectorLabel) -> Self {
        match sector.tag.region {
            Region::RindlerI => RobKet {
                wedge_i: sector,
                ..*self
            },
            Region::RindlerII => RobKet {
                wedge_ii: sector,
                ..*self
            },
            Region::Alice => panic!("RobKet has no Alice slot"),
        }
    }

    fn canonical_index(&self) -> usize {
        4 * self.wedge_i.slot_index() + self.wedge_ii.slot_index()
    }
}

impl PartialOrd for RobKet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RobKet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_index().cmp(&other.canonical_index())
    }
}

impl fmt::Display for RobKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.wedge_i, self.wedge_ii)
    }
}

/// Basis ket of the full Alice (x) wedge-I (x) wedge-II space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisKet {
    alice: SectorLabel,
    wedge_i: SectorLabel,
    wedge_ii: SectorLabel,
}

impl BasisKet {
    pub fn new(
        alice: SectorLabel,
        wedge_i: SectorLabel,
        wedge_ii: SectorLabel,
    ) -> Result<Self, FockError> {
        check_slot(Region::Alice, &alice)?;
        check_slot(Region::RindlerI, &wedge_i)?;
        check_slot(Region::RindlerII, &wedge_ii)?;
        Ok(BasisKet {
            alice,
            wedge_i,
            wedge_ii,
        })
    }

    /// Shorthand mirroring [`RobKet::build`], with Alice's occupation first.
    pub fn build(alice: u8, i: (Momentum, u8), ii: (Momentum, u8)) -> Result<Self, FockError> {
        BasisKet::new(
            SectorLabel::new(ModeTag::alice(), alice)?,
            SectorLabel::new(ModeTag::wedge_i(i.0)?, i.1)?,
            SectorLabel::new(ModeTag::wedge_ii(ii.0)?, ii.1)?,
        )
    }

    pub fn alice(&self) -> SectorLabel {
        self.alice
    }

    pub fn wedge_i(&self) -> SectorLabel {
        self.wedge_i
    }

    pub fn wedge_ii(&self) -> SectorLabel {
        self.wedge_ii
    }

    /// All 32 kets in canonical order.
    pub fn all() -> Vec<BasisKet> {
        let mut kets = Vec::with_capacity(32);
        for a in 0..2 {
            for i in 0..4 {
                for ii in 0..4 {
                    kets.push(BasisKet {
                        alice: SectorLabel::from_slot(Region::Alice, a).unwrap(),
                        wedge_i: SectorLabel::from_slot(Region::RindlerI, i).unwrap(),
                        wedge_ii: SectorLabel::from_slot(Region::RindlerII, ii).unwrap(),
                    });
                }
            }
        }
        kets
    }
}

impl Ket for BasisKet {
    const LAYOUT: &'static [Region] = &[Region::Alice, Region::RindlerI, Region::RindlerII];

    fn sector(&self, region: Region) -> Option<SectorLabel> {
        match region {
            Region::Alice => Some(self.alice),
            Region::RindlerI => Some(self.wedge_i),
            Region::RindlerII => Some(self.wedge_ii),
        }
    }

    fn with_sector(&self, sector: SectorLabel) -> Self {
        match sector.tag.region {
            Region::Alice => BasisKet {
                alice: sector,
                ..*self
            },
            Region::RindlerI => BasisKet {
                wedge_i: sector,
                ..*self
            },
            Region::RindlerII => BasisKet {
                wedge_ii: sector,
                ..*self
            },
        }
    }

    fn canonical_index(&self) -> usize {
        16 * self.alice.slot_index() + 4 * self.wedge_i.slot_index() + self.wedge_ii.slot_index()
    }
}

impl PartialOrd for BasisKet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BasisKet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_index().cmp(&other.canonical_index())
    }
}

impl fmt::Display for BasisKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{},{}>", self.alice, self.wedge_i, self.wedge_ii)
    }
}

fn check_slot(expected: Region, sector: &SectorLabel) -> Result<(), FockError> {
    if sector.tag.region == expected {
        Ok(())
    } else {
        Err(FockError::WrongSlot {
            expected,
            found: sector.tag.region,
        })
    }
}

/// Sparse state vector over the basis kets of layout `K`.
///
/// Amplitudes of magnitude below [`AMPLITUDE_PRUNE_THRESHOLD`] are dropped,
/// so the zero state is simply the empty map and exact cancellations leave
/// no residue kets behind.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<K: Ket> {
    amps: BTreeMap<K, Complex64>,
}

impl<K: Ket> StateVector<K> {
    /// The zero vector (a legal value, not an error).
    pub fn zero() -> Self {
        StateVector {
            amps: BTreeMap::new(),
        }
    }

    /// The basis state `|ket>` with amplitude 1.
    pub fn basis(ket: K) -> Self {
        let mut amps = BTreeMap::new();
        amps.insert(ket, Complex64::new(1.0, 0.0));
        StateVector { amps }
    }

    /// Builds a state from `(ket, amplitude)` terms, accumulating duplicates
    /// and pruning. Rejects non-finite amplitudes.
    pub fn from_terms<I>(terms: I) -> Result<Self, FockError>
    where
        I: IntoIterator<Item = (K, Complex64)>,
    {
        let mut amps: BTreeMap<K, Complex64> = BTreeMap::new();
        for (ket, amp) in terms {
            if !amp.re.is_finite() || !amp.im.is_finite() {
                return Err(FockError::NonFiniteAmplitude);
            }
            *amps.entry(ket).or_insert(Complex64::new(0.0, 0.0)) += amp;
        }
        amps.retain(|_, a| a.norm() >= AMPLITUDE_PRUNE_THRESHOLD);
        Ok(StateVector { amps })
    }

    /// Stored `(ket, amplitude)` pairs in canonical ket order.
    pub fn terms(&self) -> impl Iterator<Item = (K, Complex64)> + '_ {
        self.amps.iter().map(|(k, a)| (*k, *a))
    }

    /// Amplitude of one ket (zero when absent).
    pub fn amplitude(&self, ket: &K) -> Complex64 {
        self.amps
            .get(ket)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn num_terms(&self) -> usize {
        self.amps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut amps = self.amps.clone();
        for (ket, amp) in &other.amps {
            *amps.entry(*ket).or_insert(Complex64::new(0.0, 0.0)) += *amp;
        }
        amps.retain(|_, a| a.norm() >= AMPLITUDE_PRUNE_THRESHOLD);
        StateVector { amps }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let mut amps = self.amps.clone();
        for amp in amps.values_mut() {
            *amp *= factor;
        }
        amps.retain(|_, a| a.norm() >= AMPLITUDE_PRUNE_THRESHOLD);
        StateVector { amps }
    }

    /// Inner product `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (ket, amp) in &self.amps {
            if let Some(b) = other.amps.get(ket) {
                acc += amp.conj() * b;
            }
        }
        acc
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        flt::sqrt(self.norm_sqr())
    }

    /// Unit-norm copy; the zero state (norm <= [`NORM_FLOOR`]) is rejected.
    pub fn normalize(&self) -> Result<Self, FockError> {
        let norm = self.norm();
        if norm <= NORM_FLOOR {
            return Err(FockError::VanishingNorm { norm });
        }
        Ok(self.scale(Complex64::new(1.0 / norm, 0.0)))
    }
}

/// Creation or annihilation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LadderAction {
    Create,
    Annihilate,
}

/// A single fermionic ladder operator acting on one tagged wedge mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ladder {
    action: LadderAction,
    target: ModeTag,
}

impl Ladder {
    /// Validated constructor; Alice's mode is never a ladder target.
    pub fn new(action: LadderAction, target: ModeTag) -> Result<Self, FockError> {
        if target.region == Region::Alice {
            return Err(FockError::LadderOnAlice);
        }
        Ok(Ladder { action, target })
    }

    pub fn create(region: Region, momentum: Momentum) -> Result<Self, FockError> {
        Ladder::new(LadderAction::Create, wedge_tag(region, momentum)?)
    }

    pub fn annihilate(region: Region, momentum: Momentum) -> Result<Self, FockError> {
        Ladder::new(LadderAction::Annihilate, wedge_tag(region, momentum)?)
    }

    pub fn action(&self) -> LadderAction {
        self.action
    }

    pub fn target(&self) -> ModeTag {
        self.target
    }

    /// The Hermitian adjoint: create <-> annihilate on the same mode.
    pub fn adjoint(&self) -> Ladder {
        Ladder {
            action: match self.action {
                LadderAction::Create => LadderAction::Annihilate,
                LadderAction::Annihilate => LadderAction::Create,
            },
            target: self.target,
        }
    }

    /// Applies the operator to every ket of `state` and accumulates.
    ///
    /// Per ket: a mismatched momentum tag, creating on an occupied mode, or
    /// annihilating an empty one all contribute zero; otherwise the
    /// occupation flips and the amplitude picks up the fermionic sign
    /// `(-1)^n` with `n` the total occupation of wedge subsystems strictly
    /// preceding the target in the order wedge I < wedge II.
    pub fn apply<K: Ket>(&self, state: &StateVector<K>) -> StateVector<K> {
        let mut amps: BTreeMap<K, Complex64> = BTreeMap::new();
        for (ket, amp) in state.terms() {
            let sector = ket
                .sector(self.target.region)
                .expect("ladder targets are wedge modes and every layout carries both wedges");
            if sector.tag != self.target {
                continue;
            }
            let flipped = match (self.action, sector.occupation) {
                (LadderAction::Create, 0) => SectorLabel::filled(sector.tag),
                (LadderAction::Annihilate, 1) => SectorLabel::empty(sector.tag),
                _ => continue,
            };
            let signed = if parity_exponent(&ket, self.target.region) % 2 == 0 {
                amp
            } else {
                -amp
            };
            *amps
                .entry(ket.with_sector(flipped))
                .or_insert(Complex64::new(0.0, 0.0)) += signed;
        }
        amps.retain(|_, a| a.norm() >= AMPLITUDE_PRUNE_THRESHOLD);
        StateVector { amps }
    }
}

fn wedge_tag(region: Region, momentum: Momentum) -> Result<ModeTag, FockError> {
    match region {
        Region::RindlerI => ModeTag::wedge_i(momentum),
        Region::RindlerII => ModeTag::wedge_ii(momentum),
        Region::Alice => Err(FockError::LadderOnAlice),
    }
}

/// Total occupation of fermionic subsystems strictly preceding `target` in
/// the fixed order wedge I < wedge II. Alice's qubit is excluded.
fn parity_exponent<K: Ket>(ket: &K, target: Region) -> u8 {
    match target {
        Region::RindlerI => 0,
        Region::RindlerII => ket
            .sector(Region::RindlerI)
            .map(|s| s.occupation)
            .unwrap_or(0),
        Region::Alice => 0,
    }
}

/// A complex linear combination of ladder-operator products.
///
/// Each term is `(coefficient, factors)` with factors applied right to left,
/// matching the usual operator-product convention. An empty factor list is
/// the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearOperator {
    terms: Vec<(Complex64, Vec<Ladder>)>,
}

impl LinearOperator {
    pub fn new(terms: Vec<(Complex64, Vec<Ladder>)>) -> Self {
        LinearOperator { terms }
    }

    /// The identity operator.
    pub fn identity() -> Self {
        LinearOperator {
            terms: alloc::vec![(Complex64::new(1.0, 0.0), Vec::new())],
        }
    }

    pub fn terms(&self) -> &[(Complex64, Vec<Ladder>)] {
        &self.terms
    }

    /// Hermitian adjoint: coefficients conjugated, each factor adjointed,
    /// factor order reversed.
    pub fn adjoint(&self) -> LinearOperator {
        LinearOperator {
            terms: self
                .terms
                .iter()
                .map(|(coeff, factors)| {
                    (
                        coeff.conj(),
                        factors.iter().rev().map(Ladder::adjoint).collect(),
                    )
                })
                .collect(),
        }
    }

    /// Applies every term to `state` and sums.
    pub fn apply<K: Ket>(&self, state: &StateVector<K>) -> StateVector<K> {
        let mut result = StateVector::zero();
        for (coeff, factors) in &self.terms {
            let mut partial = state.clone();
            for ladder in factors.iter().rev() {
                partial = ladder.apply(&partial);
                if partial.is_zero() {
                    break;
                }
            }
            result = result.add(&partial.scale(*coeff));
        }
        result
    }
}

/// Tensors Alice's qubit onto a two-wedge state:
/// `(a0 |0_A> + a1 |1_A>) (x) |rob>`. No fermionic sign is introduced —
/// Alice's mode is distinguishable and sits outside the wedge sign string.
pub fn tensor_with_alice(
    alice_amplitudes: (Complex64, Complex64),
    rob: &StateVector<RobKet>,
) -> StateVector<BasisKet> {
    let alice_tag = ModeTag::alice();
    let mut amps: BTreeMap<BasisKet, Complex64> = BTreeMap::new();
    for (rk, amp) in rob.terms() {
        for (occ, a) in [(0u8, alice_amplitudes.0), (1u8, alice_amplitudes.1)] {
            let slot = SectorLabel {
                tag: alice_tag,
                occupation: occ,
            };
            let ket = BasisKet {
                alice: slot,
                wedge_i: rk.wedge_i,
                wedge_ii: rk.wedge_ii,
            };
            let product = a * amp;
            if product.norm() >= AMPLITUDE_PRUNE_THRESHOLD {
                amps.insert(ket, product);
            }
        }
    }
    StateVector { amps }
}
