//! Invariants under extra physical constraints: hardcore repulsion, strong
//! attraction, and one fermion pinned to mode A.

use num_complex::Complex64;

use super::amps::{require_sector, require_support, Amps};
use super::three::hyperdeterminant;
use super::InvariantValue;
use crate::error::Result;
use crate::fock::{ModeOccupation, StateVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Repulsive {
    I1,
    I2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Attractive {
    /// `m_{0◇} m_{◇0}` for one pair in two modes.
    PairMonomial,
    AbCd,
    AdBc,
    AcBd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Localized {
    A1,
    A2,
    AL,
}

/// Two fermions in three modes with no double occupancy.
pub fn repulsive_invariant(state: &StateVector, which: Repulsive) -> Result<InvariantValue> {
    require_sector(state, 3, 2, "the hardcore invariants")?;
    require_support(state, "hardcore invariants", |occ| {
        !occ.contains(&ModeOccupation::Double)
    })?;
    let a = Amps::new(state);
    let m = |s: &str| a.m(s);
    Ok(match which {
        Repulsive::I1 => InvariantValue::new(
            (m("uu0") * m("dd0") - m("ud0") * m("du0"))
                * (m("0uu") * m("0dd") - m("0ud") * m("0du"))
                * (m("u0u") * m("d0d") - m("u0d") * m("d0u")),
            6,
        ),
        Repulsive::I2 => InvariantValue::new(
            m("uu0") * (m("0dd") * m("d0u") - m("0du") * m("d0d"))
                + m("ud0") * (m("0uu") * m("d0d") - m("0ud") * m("d0u"))
                + m("du0") * (m("0du") * m("u0d") - m("0dd") * m("u0u"))
                + m("dd0") * (m("0ud") * m("u0u") - m("0uu") * m("u0d")),
            3,
        ),
    })
}

fn pair_only(occ: &[ModeOccupation]) -> bool {
    occ.iter()
        .all(|o| matches!(o, ModeOccupation::Empty | ModeOccupation::Double))
}

/// Paired fermions: every mode is empty or doubly occupied.
pub fn attractive_invariant(state: &StateVector, which: Attractive) -> Result<InvariantValue> {
    if which == Attractive::PairMonomial {
        require_sector(state, 2, 2, "the pair monomial")?;
    } else {
        require_sector(state, 4, 4, "the four-mode pair invariants")?;
    }
    require_support(state, "paired invariants", pair_only)?;
    let a = Amps::new(state);
    let m = |s: &str| a.m(s);
    let v = match which {
        Attractive::PairMonomial => m("0D") * m("D0"),
        Attractive::AbCd => m("0DD0") * m("D00D") - m("0D0D") * m("D0D0"),
        Attractive::AdBc => m("00DD") * m("DD00") - m("0D0D") * m("D0D0"),
        Attractive::AcBd => m("0DD0") * m("D00D") - m("00DD") * m("DD00"),
    };
    Ok(InvariantValue::new(v, 2))
}

fn ial(m: &impl Fn(&str) -> Complex64) -> Complex64 {
    m("u0D") * m("dD0") - m("d0D") * m("uD0")
}

/// Three fermions in three modes with one fermion localized in mode A.
pub fn localized_invariant(state: &StateVector, which: Localized) -> Result<InvariantValue> {
    require_sector(state, 3, 3, "the localized invariants")?;
    require_support(state, "mode A must hold exactly one fermion", |occ| occ[0].is_single())?;
    if which == Localized::AL {
        require_support(state, "modes B and C must be paired", |occ| pair_only(&occ[1..]))?;
    }
    let a = Amps::new(state);
    let m = |s: &str| a.m(s);
    Ok(match which {
        Localized::A1 => InvariantValue::new(
            m("u0D") * m("uD0") * (m("ddu") * m("dud") - m("ddd") * m("duu")) * 2.0
                + m("d0D") * m("dD0") * (m("udu") * m("uud") - m("udd") * m("uuu")) * 2.0
                + m("u0D") * m("dD0") * (m("ddd") * m("uuu") - m("dud") * m("udu"))
                + m("u0D") * m("dD0") * (m("duu") * m("udd") - m("ddu") * m("uud"))
                + m("d0D") * m("uD0") * (m("ddd") * m("uuu") - m("dud") * m("udu"))
                + m("d0D") * m("uD0") * (m("duu") * m("udd") - m("ddu") * m("uud")),
            4,
        ),
        Localized::A2 => {
            let l = ial(&m);
            InvariantValue::new(l * l * hyperdeterminant(&a), 8)
        }
        Localized::AL => InvariantValue::new(ial(&m), 2),
    })
}
