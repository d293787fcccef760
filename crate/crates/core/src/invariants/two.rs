use super::amps::{require_sector, Amps};
use super::InvariantValue;
use crate::error::Result;
use crate::fock::StateVector;

/// The single generator for two fermions in two modes.
pub fn i0(state: &StateVector) -> Result<InvariantValue> {
    require_sector(state, 2, 2, "I0")?;
    let a = Amps::new(state);
    let m = |s: &str| a.m(s);
    let v = (m("uu") * m("dd") - m("ud") * m("du")) * m("0D") * m("D0");
    Ok(InvariantValue::new(v, 4))
}

/// Fermionic concurrence. Not an SLOCC invariant: kept for comparison with
/// `I0` on states related by local particle exchange.
pub fn fermionic_concurrence(state: &StateVector) -> Result<f64> {
    require_sector(state, 2, 2, "the fermionic concurrence")?;
    let a = Amps::new(state);
    let m = |s: &str| a.m(s);
    Ok((m("0D") * m("D0") - m("uu") * m("dd") + m("ud") * m("du")).norm())
}
