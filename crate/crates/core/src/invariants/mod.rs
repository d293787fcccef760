//! Polynomial SLOCC invariants with their monotones, plus single-mode
//! reduced density matrices.

mod amps;
mod constrained;
mod rdm;
mod three;
mod two;

use std::fmt;

use num_complex::Complex64;

pub use constrained::{
    attractive_invariant, localized_invariant, repulsive_invariant, Attractive, Localized, Repulsive,
};
pub use rdm::{reduced_density_matrix, subsystem_entropy, ReducedDensityMatrix, EIGEN_FLOOR};
pub use three::{i_abc, i_deg4, i_pair, three_tangle, Abc, Deg4, Pair};
pub use two::{fermionic_concurrence, i0};

use crate::error::Result;
use crate::fock::StateVector;

/// Value of a homogeneous invariant together with its degree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantValue {
    pub value: Complex64,
    pub degree: u32,
}

impl InvariantValue {
    pub fn new(value: Complex64, degree: u32) -> Self {
        InvariantValue { value, degree }
    }

    /// `|I|^{2/k}`, an entanglement monotone for an invariant of degree `k`.
    pub fn monotone(&self) -> f64 {
        monotone(self)
    }
}

pub fn monotone(inv: &InvariantValue) -> f64 {
    inv.value.norm().powf(2.0 / f64::from(inv.degree))
}

/// Every named invariant in the crate, for uniform iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvariantId {
    I0,
    Deg4(Deg4),
    Pair(Pair),
    Abc(Abc),
    Repulsive(Repulsive),
    Attractive(Attractive),
    Localized(Localized),
}

/// Which constraint family an invariant belongs to; decides the sector, the
/// allowed support and the subgroup it is invariant under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    TwoModes,
    Full3,
    Repulsive,
    AttractivePair,
    Attractive4,
    LocalizedA,
}

impl InvariantId {
    /// The seven generators for three fermions in three modes.
    pub const GENERATORS: [InvariantId; 7] = [
        InvariantId::Deg4(Deg4::I1),
        InvariantId::Deg4(Deg4::I2),
        InvariantId::Pair(Pair::BC),
        InvariantId::Pair(Pair::AC),
        InvariantId::Pair(Pair::AB),
        InvariantId::Abc(Abc::I1),
        InvariantId::Abc(Abc::I2),
    ];

    pub const ALL: [InvariantId; 17] = [
        InvariantId::I0,
        InvariantId::Deg4(Deg4::I1),
        InvariantId::Deg4(Deg4::I2),
        InvariantId::Pair(Pair::BC),
        InvariantId::Pair(Pair::AC),
        InvariantId::Pair(Pair::AB),
        InvariantId::Abc(Abc::I1),
        InvariantId::Abc(Abc::I2),
        InvariantId::Repulsive(Repulsive::I1),
        InvariantId::Repulsive(Repulsive::I2),
        InvariantId::Attractive(Attractive::PairMonomial),
        InvariantId::Attractive(Attractive::AbCd),
        InvariantId::Attractive(Attractive::AdBc),
        InvariantId::Attractive(Attractive::AcBd),
        InvariantId::Localized(Localized::A1),
        InvariantId::Localized(Localized::A2),
        InvariantId::Localized(Localized::AL),
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantId::I0 => "I0",
            InvariantId::Deg4(Deg4::I1) => "I1",
            InvariantId::Deg4(Deg4::I2) => "I2",
            InvariantId::Pair(Pair::BC) => "IBC",
            InvariantId::Pair(Pair::AC) => "IAC",
            InvariantId::Pair(Pair::AB) => "IAB",
            InvariantId::Abc(Abc::I1) => "IABC1",
            InvariantId::Abc(Abc::I2) => "IABC2",
            InvariantId::Repulsive(Repulsive::I1) => "Irep1",
            InvariantId::Repulsive(Repulsive::I2) => "Irep2",
            InvariantId::Attractive(Attractive::PairMonomial) => "Ipair",
            InvariantId::Attractive(Attractive::AbCd) => "IAB|CD",
            InvariantId::Attractive(Attractive::AdBc) => "IAD|BC",
            InvariantId::Attractive(Attractive::AcBd) => "IAC|BD",
            InvariantId::Localized(Localized::A1) => "IA1",
            InvariantId::Localized(Localized::A2) => "IA2",
            InvariantId::Localized(Localized::AL) => "IAL",
        }
    }

    pub fn degree(self) -> u32 {
        match self {
            InvariantId::I0 | InvariantId::Deg4(_) => 4,
            InvariantId::Pair(_) => 8,
            InvariantId::Abc(_) => 12,
            InvariantId::Repulsive(Repulsive::I1) => 6,
            InvariantId::Repulsive(Repulsive::I2) => 3,
            InvariantId::Attractive(_) => 2,
            InvariantId::Localized(Localized::A1) => 4,
            InvariantId::Localized(Localized::A2) => 8,
            InvariantId::Localized(Localized::AL) => 2,
        }
    }

    pub fn family(self) -> Family {
        match self {
            InvariantId::I0 => Family::TwoModes,
            InvariantId::Deg4(_) | InvariantId::Pair(_) | InvariantId::Abc(_) => Family::Full3,
            InvariantId::Repulsive(_) => Family::Repulsive,
            InvariantId::Attractive(Attractive::PairMonomial) => Family::AttractivePair,
            InvariantId::Attractive(_) => Family::Attractive4,
            InvariantId::Localized(_) => Family::LocalizedA,
        }
    }

    pub fn evaluate(self, state: &StateVector) -> Result<InvariantValue> {
        match self {
            InvariantId::I0 => i0(state),
            InvariantId::Deg4(v) => i_deg4(state, v),
            InvariantId::Pair(p) => i_pair(state, p),
            InvariantId::Abc(v) => i_abc(state, v),
            InvariantId::Repulsive(w) => repulsive_invariant(state, w),
            InvariantId::Attractive(w) => attractive_invariant(state, w),
            InvariantId::Localized(w) => localized_invariant(state, w),
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Family {
    pub fn members(self) -> Vec<InvariantId> {
        InvariantId::ALL.into_iter().filter(|id| id.family() == self).collect()
    }
}
