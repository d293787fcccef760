//! The seven generators for three fermions in three modes, and the
//! three-tangle of the singly occupied block. Every polynomial is the literal
//! signed monomial sum; `u`, `d`, `0`, `D` spell ↑, ↓, empty and ◇.

use num_complex::Complex64;

use super::amps::{require_sector, Amps};
use super::InvariantValue;
use crate::error::Result;
use crate::fock::StateVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deg4 {
    I1,
    I2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    BC,
    AC,
    AB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Abc {
    I1,
    I2,
}

fn amps33(state: &StateVector, what: &str) -> Result<Amps> {
    require_sector(state, 3, 3, what)?;
    Ok(Amps::new(state))
}

pub fn i_deg4(state: &StateVector, variant: Deg4) -> Result<InvariantValue> {
    let a = amps33(state, "the degree-4 invariants")?;
    let m = |s: &str| a.m(s);
    let v = match variant {
        Deg4::I1 => {
            m("u0D") * m("0Du") * (m("Du0") * m("ddd") - m("Dd0") * m("dud"))
                + m("u0D") * m("0Dd") * (m("Dd0") * m("duu") - m("Du0") * m("ddu"))
                + m("d0D") * m("0Du") * (m("Dd0") * m("uud") - m("Du0") * m("udd"))
                + m("d0D") * m("0Dd") * (m("Du0") * m("udu") - m("Dd0") * m("uuu"))
        }
        Deg4::I2 => {
            m("uD0") * m("D0u") * (m("0uD") * m("ddd") - m("0dD") * m("dud"))
                + m("uD0") * m("D0d") * (m("0dD") * m("duu") - m("0uD") * m("ddu"))
                + m("dD0") * m("D0u") * (m("0dD") * m("uud") - m("0uD") * m("udd"))
                + m("dD0") * m("D0d") * (m("0uD") * m("udu") - m("0dD") * m("uuu"))
        }
    };
    Ok(InvariantValue::new(v, 4))
}

pub fn i_pair(state: &StateVector, pair: Pair) -> Result<InvariantValue> {
    let a = amps33(state, "the degree-8 invariants")?;
    let m = |s: &str| a.m(s);
    let det_a = m("0Du") * m("D0d") - m("0Dd") * m("D0u");
    let det_b = m("0uD") * m("Dd0") - m("0dD") * m("Du0");
    let det_c = m("u0D") * m("dD0") - m("d0D") * m("uD0");
    let v = match pair {
        Pair::BC => {
            det_a
                * det_b
                * (m("u0D") * m("uD0") * (m("ddu") * m("dud") - m("ddd") * m("duu")) * 2.0
                    + m("d0D") * m("dD0") * (m("udu") * m("uud") - m("udd") * m("uuu")) * 2.0
                    + (m("u0D") * m("dD0") + m("d0D") * m("uD0"))
                        * (m("ddd") * m("uuu") - m("dud") * m("udu") - m("ddu") * m("uud") + m("duu") * m("udd")))
        }
        Pair::AC => {
            det_a
                * det_c
                * (m("0uD") * m("Du0") * (m("ddu") * m("udd") - m("ddd") * m("udu")) * 2.0
                    + m("0dD") * m("Dd0") * (m("duu") * m("uud") - m("dud") * m("uuu")) * 2.0
                    + (m("0uD") * m("Dd0") + m("0dD") * m("Du0"))
                        * (m("ddd") * m("uuu") - m("duu") * m("udd") + m("dud") * m("udu") - m("ddu") * m("uud")))
        }
        Pair::AB => {
            det_b
                * det_c
                * (m("0Du") * m("D0u") * (m("dud") * m("udd") - m("ddd") * m("uud")) * 2.0
                    + m("0Dd") * m("D0d") * (m("duu") * m("udu") - m("ddu") * m("uuu")) * 2.0
                    + (m("0Du") * m("D0d") + m("0Dd") * m("D0u"))
                        * (m("ddd") * m("uuu") - m("duu") * m("udd") - m("dud") * m("udu") + m("ddu") * m("uud")))
        }
    };
    Ok(InvariantValue::new(v, 8))
}

pub fn i_abc(state: &StateVector, variant: Abc) -> Result<InvariantValue> {
    let a = amps33(state, "the degree-12 invariants")?;
    let m = |s: &str| a.m(s);
    let prefactor = (m("0Du") * m("D0d") - m("0Dd") * m("D0u"))
        * (m("0uD") * m("Dd0") - m("0dD") * m("Du0"))
        * (m("u0D") * m("dD0") - m("d0D") * m("uD0"));
    // The two brackets differ only in which ◇-carrying labels enter.
    let (xu, xd, yu, yd, zd, zu) = match variant {
        Abc::I1 => ("u0D", "d0D", "0Du", "0Dd", "Dd0", "Du0"),
        Abc::I2 => ("uD0", "dD0", "D0u", "D0d", "0dD", "0uD"),
    };
    let q = m("ddu") * m("uud") + m("ddd") * m("uuu") - m("duu") * m("udd") - m("dud") * m("udu");
    let r = m("duu") * m("udd") + m("dud") * m("udu") - m("ddu") * m("uud") - m("ddd") * m("uuu");
    let bracket =
        m(xu) * m(yu) * (m(zd) * m("duu") - m(zu) * m("ddu")) * (m("dud") * m("udd") - m("ddd") * m("uud")) * 2.0
            + m(xu) * m(yd) * (m(zd) * m("dud") - m(zu) * m("ddd")) * (m("duu") * m("udu") - m("ddu") * m("uuu")) * 2.0
            + m(xd) * m(yu) * (m(zd) * m("uuu") - m(zu) * m("udu")) * (m("ddd") * m("uud") - m("dud") * m("udd")) * 2.0
            + m(xd) * m(yd) * (m(zd) * m("uud") - m(zu) * m("udd")) * (m("ddu") * m("uuu") - m("duu") * m("udu")) * 2.0
            + m(xu) * m(yd) * (m(zd) * m("duu") - m(zu) * m("ddu")) * q
            + m(xu) * m(yu) * (m(zd) * m("dud") - m(zu) * m("ddd")) * q
            + m(xd) * m(yd) * (m(zd) * m("uuu") - m(zu) * m("udu")) * r
            + m(xd) * m(yu) * (m(zd) * m("uud") - m(zu) * m("udd")) * r;
    Ok(InvariantValue::new(prefactor * bracket, 12))
}

/// Cayley hyperdeterminant of the eight singly occupied amplitudes.
pub(crate) fn hyperdeterminant(a: &Amps) -> Complex64 {
    let m = |s: &str| a.m(s);
    let sq = |z: Complex64| z * z;
    sq(m("ddd")) * sq(m("uuu"))
        + sq(m("udd")) * sq(m("duu"))
        + sq(m("dud")) * sq(m("udu"))
        + sq(m("ddu")) * sq(m("uud"))
        - (m("ddd") * m("ddu") * m("uud") * m("uuu")
            + m("ddd") * m("dud") * m("udu") * m("uuu")
            + m("ddd") * m("duu") * m("udd") * m("uuu")
            + m("ddu") * m("dud") * m("udu") * m("uud")
            + m("ddu") * m("uud") * m("duu") * m("udd")
            + m("dud") * m("duu") * m("udu") * m("udd"))
            * 2.0
        + (m("ddd") * m("duu") * m("udu") * m("uud") + m("uuu") * m("udd") * m("dud") * m("ddu")) * 4.0
}

/// Three-tangle τ of the singly occupied block; `2|τ|^{1/2}` is the usual
/// measure.
pub fn three_tangle(state: &StateVector) -> Result<InvariantValue> {
    let a = amps33(state, "the three-tangle")?;
    Ok(InvariantValue::new(hyperdeterminant(&a), 4))
}
