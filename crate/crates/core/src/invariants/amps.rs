use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{ModeOccupation, StateVector};

/// Dense base-4 lookup of a state's amplitudes by label spelling, so the
/// transcribed polynomials can be written as `m("u0D")`.
pub(crate) struct Amps {
    n_modes: usize,
    table: Vec<Complex64>,
}

impl Amps {
    pub(crate) fn new(state: &StateVector) -> Self {
        let n_modes = state.sector().n_modes();
        let mut table = vec![Complex64::new(0.0, 0.0); 1 << (2 * n_modes)];
        for (label, a) in state.iter() {
            let idx = label.occupations().iter().fold(0usize, |acc, o| acc * 4 + o.index());
            table[idx] = a;
        }
        Amps { n_modes, table }
    }

    /// Amplitude of the label spelled over `u d 0 D`. Labels outside the
    /// sector read as zero.
    pub(crate) fn m(&self, label: &str) -> Complex64 {
        debug_assert_eq!(label.len(), self.n_modes, "{label}");
        let idx = label.chars().fold(0usize, |acc, c| {
            let o = ModeOccupation::from_symbol(c).expect("valid symbol");
            acc * 4 + o.index()
        });
        self.table[idx]
    }
}

pub(crate) fn require_sector(state: &StateVector, n_modes: usize, n_particles: usize, what: &str) -> Result<()> {
    let s = state.sector();
    if s.n_modes() != n_modes || s.n_particles() != n_particles {
        return Err(Error::domain(format!(
            "{what} needs {n_particles} particles in {n_modes} modes, got {} in {}",
            s.n_particles(),
            s.n_modes()
        )));
    }
    Ok(())
}

/// Rejects states with weight on labels failing `allowed`. Weight below
/// `1e-12` of the norm counts as absent.
pub(crate) fn require_support<F>(state: &StateVector, what: &str, allowed: F) -> Result<()>
where
    F: Fn(&[ModeOccupation]) -> bool,
{
    let cutoff = 1e-12 * state.norm();
    for (label, a) in state.iter() {
        if a.norm() > cutoff && !allowed(label.occupations()) {
            return Err(Error::domain(format!(
                "{what}: amplitude on {label} violates the support constraint"
            )));
        }
    }
    Ok(())
}
