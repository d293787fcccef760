use num_complex::Complex64;

use super::poly::{SparsePolynomial, Symbol, VarFamily};
use crate::error::{Error, Result};
use crate::fock::{enumerate_sector, BasisLabel, ModeOccupation, Sector, Spin, StateVector};

/// The seven forms: the trilinear `M` and the six linear `m_ab`, where
/// `m_ab` has ◇ in mode `a` and its variable in mode `b`; mode `c` is empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    M,
    M12,
    M13,
    M21,
    M23,
    M31,
    M32,
}

impl FormKind {
    pub const ALL: [FormKind; 7] = [
        FormKind::M,
        FormKind::M12,
        FormKind::M13,
        FormKind::M21,
        FormKind::M23,
        FormKind::M31,
        FormKind::M32,
    ];

    /// Variable families in index order (`M_ijk` → x, y, z).
    pub fn families(self) -> &'static [VarFamily] {
        match self {
            FormKind::M => &[VarFamily::X, VarFamily::Y, VarFamily::Z],
            FormKind::M21 | FormKind::M31 => &[VarFamily::X],
            FormKind::M12 | FormKind::M32 => &[VarFamily::Y],
            FormKind::M23 | FormKind::M13 => &[VarFamily::Z],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FormKind::M => "M",
            FormKind::M12 => "m12",
            FormKind::M13 => "m13",
            FormKind::M21 => "m21",
            FormKind::M23 => "m23",
            FormKind::M31 => "m31",
            FormKind::M32 => "m32",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Occupation of each mode in a term of this form; `None` marks the
    /// mode carrying the form variable.
    fn pattern(self) -> [Option<ModeOccupation>; 3] {
        use ModeOccupation::{Double as D, Empty as E};
        match self {
            FormKind::M => [None, None, None],
            FormKind::M21 => [None, Some(D), Some(E)],
            FormKind::M31 => [None, Some(E), Some(D)],
            FormKind::M12 => [Some(D), None, Some(E)],
            FormKind::M32 => [Some(E), None, Some(D)],
            FormKind::M23 => [Some(E), Some(D), None],
            FormKind::M13 => [Some(D), Some(E), None],
        }
    }
}

/// The seven forms with coefficients either symbolic or numeric.
#[derive(Clone, Debug)]
pub struct FormCollection {
    forms: [SparsePolynomial; 7],
}

impl FormCollection {
    pub fn get(&self, kind: FormKind) -> &SparsePolynomial {
        &self.forms[FormKind::ALL.iter().position(|&k| k == kind).unwrap()]
    }
}

fn spin_of(o: ModeOccupation) -> Spin {
    if o == ModeOccupation::Up {
        Spin::Up
    } else {
        Spin::Down
    }
}

fn build_with(coefficient: impl Fn(&BasisLabel, usize) -> SparsePolynomial) -> FormCollection {
    let sector = three_fermion_sector();
    let forms = FormKind::ALL.map(|kind| {
        let pattern = kind.pattern();
        let mut acc = SparsePolynomial::zero();
        for (idx, label) in sector.basis().iter().enumerate() {
            let fits = label.occupations().iter().zip(pattern).all(|(&o, p)| match p {
                Some(q) => o == q,
                None => o.is_single(),
            });
            if !fits {
                continue;
            }
            let mut term = SparsePolynomial::constant(Complex64::new(1.0, 0.0));
            for (mode, p) in pattern.iter().enumerate() {
                if p.is_none() {
                    let sym = Symbol::aux(VarFamily::ALL[mode], spin_of(label.mode(mode)), 0);
                    term = &term * &SparsePolynomial::var(sym);
                }
            }
            acc = acc + &coefficient(label, idx) * &term;
        }
        acc
    });
    FormCollection { forms }
}

pub(crate) fn three_fermion_sector() -> Sector {
    enumerate_sector(3, 3).expect("valid sector")
}

/// Forms whose coefficients are the amplitude symbols.
pub fn build_forms() -> FormCollection {
    build_with(|_, idx| SparsePolynomial::var(Symbol::Amplitude(idx as u16)))
}

/// Forms whose coefficients are the amplitudes of `state`.
pub fn numeric_forms(state: &StateVector) -> Result<FormCollection> {
    let s = state.sector();
    if s.n_modes() != 3 || s.n_particles() != 3 {
        return Err(Error::domain("forms are defined for three fermions in three modes"));
    }
    let amps = state.amplitudes();
    Ok(build_with(|_, idx| SparsePolynomial::constant(amps[idx])))
}
