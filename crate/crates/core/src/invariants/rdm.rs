use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::StateVector;

/// Eigenvalues below this are treated as exact zeros in the entropy.
pub const EIGEN_FLOOR: f64 = 1e-14;

/// Single-mode reduced density matrix in the `(↑, ↓, 0, ◇)` basis.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedDensityMatrix(pub Matrix4<Complex64>);

/// Traces out every mode except `mode`. Entries between different local
/// particle numbers vanish under the superselection rule and are stored as
/// exact zeros.
pub fn reduced_density_matrix(state: &StateVector, mode: usize) -> Result<ReducedDensityMatrix> {
    let sector = state.sector();
    if mode >= sector.n_modes() {
        return Err(Error::domain(format!(
            "mode {mode} out of range for {} modes",
            sector.n_modes()
        )));
    }
    let mut r = Matrix4::zeros();
    for (label, a) in state.iter() {
        if a.norm_sqr() == 0.0 {
            continue;
        }
        let mi = label.mode(mode);
        for occ in crate::fock::ModeOccupation::ALL {
            if occ.particle_count() != mi.particle_count() {
                continue;
            }
            let partner = if occ == mi {
                a
            } else {
                state.amplitude(&label.with_mode(mode, occ))
            };
            r[(mi.index(), occ.index())] += a * partner.conj();
        }
    }
    Ok(ReducedDensityMatrix(r))
}

impl ReducedDensityMatrix {
    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace().re
    }

    /// Eigenvalues in ascending order: the spin block is a 2×2 Hermitian
    /// matrix, the empty and doubly occupied entries are already diagonal.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let (a, d, b) = (self.0[(0, 0)].re, self.0[(1, 1)].re, self.0[(0, 1)]);
        let mean = 0.5 * (a + d);
        let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
        let mut ev = [mean - half_gap, mean + half_gap, self.0[(2, 2)].re, self.0[(3, 3)].re];
        ev.sort_by(f64::total_cmp);
        ev
    }

    /// Von Neumann entropy with the natural logarithm.
    pub fn entropy(&self) -> f64 {
        self.eigenvalues()
            .iter()
            .filter(|&&l| l > EIGEN_FLOOR)
            .map(|&l| -l * l.ln())
            .sum()
    }
}

pub fn subsystem_entropy(rdm: &ReducedDensityMatrix) -> f64 {
    rdm.entropy()
}
