//! Maximally entangled states: the two-fermion maximum, the three-fermion
//! examples isolating one generator each, and the cyclic construction for
//! arbitrary half-odd spin.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{state_from_amplitudes, BasisLabel, ModeOccupation, Sector, StateVector};
use crate::invariants::{reduced_density_matrix, Abc, Deg4, InvariantId, Pair};

/// Largest sector the constructors will enumerate.
pub const MAX_LABELS: u128 = 1 << 20;

/// `(|↑↑⟩ + |↓↓⟩ + |0◇⟩ + |◇0⟩)/2`.
pub fn two_fermion_max() -> StateVector {
    let h = Complex64::new(0.5, 0.0);
    StateVector::from_labels(&[("uu", h), ("dd", h), ("0D", h), ("D0", h)], false).expect("fixed labels")
}

/// Three-fermion maximally entangled states on which a single generator is
/// nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExampleKind {
    I2Only,
    I1Only,
    IabOnly,
    IacOnly,
    IbcOnly,
    Iabc1Only,
    Iabc2Only,
}

impl ExampleKind {
    pub const ALL: [ExampleKind; 7] = [
        ExampleKind::I2Only,
        ExampleKind::I1Only,
        ExampleKind::IabOnly,
        ExampleKind::IacOnly,
        ExampleKind::IbcOnly,
        ExampleKind::Iabc1Only,
        ExampleKind::Iabc2Only,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleKind::I2Only => "I2_only",
            ExampleKind::I1Only => "I1_only",
            ExampleKind::IabOnly => "IAB_only",
            ExampleKind::IacOnly => "IAC_only",
            ExampleKind::IbcOnly => "IBC_only",
            ExampleKind::Iabc1Only => "IABC1_only",
            ExampleKind::Iabc2Only => "IABC2_only",
        }
    }

    /// The generator that survives on this state.
    pub fn designated(self) -> InvariantId {
        match self {
            ExampleKind::I2Only => InvariantId::Deg4(Deg4::I2),
            ExampleKind::I1Only => InvariantId::Deg4(Deg4::I1),
            ExampleKind::IabOnly => InvariantId::Pair(Pair::AB),
            ExampleKind::IacOnly => InvariantId::Pair(Pair::AC),
            ExampleKind::IbcOnly => InvariantId::Pair(Pair::BC),
            ExampleKind::Iabc1Only => InvariantId::Abc(Abc::I1),
            ExampleKind::Iabc2Only => InvariantId::Abc(Abc::I2),
        }
    }
}

impl fmt::Display for ExampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExampleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ExampleKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown example kind {s:?}")))
    }
}

fn uniform(labels: &[(&str, f64)]) -> StateVector {
    let entries: Vec<(&str, Complex64)> = labels.iter().map(|&(l, w)| (l, Complex64::new(w, 0.0))).collect();
    StateVector::from_labels(&entries, true).expect("fixed labels")
}

const SWAP_AB: [usize; 3] = [1, 0, 2];
const SWAP_BC: [usize; 3] = [0, 2, 1];
const SWAP_AC: [usize; 3] = [2, 1, 0];

pub fn example_state(kind: ExampleKind) -> StateVector {
    let i2 = || uniform(&[("uD0", 1.0), ("0uD", 1.0), ("D0u", 1.0), ("ddd", 1.0)]);
    let iab = || {
        uniform(&[
            ("uD0", 1.0),
            ("0uD", 1.0),
            ("D0u", 1.0),
            ("0Du", 1.0),
            ("d0D", 1.0),
            ("Dd0", 1.0),
            ("dud", 1.0),
            ("udd", 1.0),
        ])
    };
    let s2 = std::f64::consts::SQRT_2;
    let iabc1 = || {
        uniform(&[
            ("u0D", s2),
            ("0Du", s2),
            ("Du0", s2),
            ("D0d", 1.0),
            ("0dD", 1.0),
            ("dD0", 1.0),
            ("dud", 1.0),
            ("udd", 1.0),
            ("ddu", 1.0),
        ])
    };
    let permuted = |s: StateVector, p: &[usize]| s.permute_modes(p).expect("three modes");
    match kind {
        ExampleKind::I2Only => i2(),
        ExampleKind::I1Only => permuted(i2(), &SWAP_AB),
        ExampleKind::IabOnly => iab(),
        ExampleKind::IacOnly => permuted(iab(), &SWAP_BC),
        ExampleKind::IbcOnly => permuted(iab(), &SWAP_AC),
        ExampleKind::Iabc1Only => iabc1(),
        ExampleKind::Iabc2Only => permuted(iabc1(), &SWAP_AB),
    }
}

/// Six-term odd-attractive state: every invariant of its class vanishes but
/// its reduced density matrices are not maximally mixed.
pub fn odd_attractive_state() -> StateVector {
    uniform(&[
        ("uD0", 1.0),
        ("d0D", 1.0),
        ("0uD", 1.0),
        ("Dd0", 1.0),
        ("D0u", 1.0),
        ("0Dd", 1.0),
    ])
}

/// Spin `p/2` (odd `p`) and the number `r` of concatenated blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicSpec {
    pub p: u32,
    pub r: u32,
}

impl CyclicSpec {
    pub fn new(p: u32, r: u32) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::domain(format!("p = {p} is even: spin p/2 is bosonic")));
        }
        if r == 0 {
            return Err(Error::domain("r must be positive"));
        }
        Ok(CyclicSpec { p, r })
    }

    pub fn local_dim(self) -> u128 {
        1u128 << (self.p + 1)
    }

    pub fn n_modes(self) -> u128 {
        u128::from(self.r) * self.local_dim()
    }

    pub fn n_particles(self) -> u128 {
        u128::from(self.r) * (1u128 << self.p) * u128::from(self.p + 1)
    }

    /// Size of the target sector, saturating on overflow.
    pub fn sector_dim(self) -> u128 {
        // Each mode is p+1 fermionic slots: choose n_particles of them.
        binomial(self.n_modes() * u128::from(self.p + 1), self.n_particles())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Local state for the integer label `v` of a spin-½ mode.
fn occupation_of(v: usize) -> ModeOccupation {
    [
        ModeOccupation::Empty,
        ModeOccupation::Up,
        ModeOccupation::Down,
        ModeOccupation::Double,
    ][v]
}

/// Equal superposition of the `2^(p+1)` cyclic shifts of the concatenated
/// sequence `(0, 1, …, 2^(p+1) − 1)^r`.
pub fn cyclic_max_state(spec: CyclicSpec) -> Result<StateVector> {
    let spec = CyclicSpec::new(spec.p, spec.r)?;
    if spec.sector_dim() > MAX_LABELS {
        return Err(Error::Resource(format!(
            "spin {}/2 with r = {} needs {} basis labels (limit {MAX_LABELS})",
            spec.p,
            spec.r,
            spec.sector_dim()
        )));
    }
    if spec.p != 1 {
        // Only reachable if the guard is raised: modes here are spin-½.
        return Err(Error::domain("only spin-1/2 modes are represented"));
    }
    let d = spec.local_dim() as usize;
    let n = spec.n_modes() as usize;
    let sector = Sector::new(n, spec.n_particles() as usize)?;
    let weight = Complex64::new((d as f64).sqrt().recip(), 0.0);
    let terms = (0..d).map(|shift| {
        let occ = (0..n).map(|k| occupation_of((k + d - shift) % d)).collect();
        (BasisLabel::new(occ), weight)
    });
    state_from_amplitudes(&sector, terms, false)
}

/// True when every single-mode reduced density matrix is within `tol` of
/// `I/4` entrywise.
pub fn is_maximally_entangled(state: &StateVector, tol: f64) -> bool {
    (0..state.sector().n_modes()).all(|k| {
        let rdm = reduced_density_matrix(state, k).expect("mode in range");
        (0..4).all(|i| {
            (0..4).all(|j| {
                let target = if i == j { 0.25 } else { 0.0 };
                (rdm.0[(i, j)] - Complex64::new(target, 0.0)).norm() <= tol
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::i0;

    #[test]
    fn two_fermion_max_anchors() {
        let s = two_fermion_max();
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert!((i0(&s).unwrap().value.norm().sqrt() - 0.25).abs() < 1e-12);
        assert!(is_maximally_entangled(&s, 1e-12));
    }

    #[test]
    fn product_state_is_not_maximal() {
        let s = StateVector::from_labels(&[("ud", Complex64::new(1.0, 0.0))], true).unwrap();
        assert!(!is_maximally_entangled(&s, 1e-12));
        assert!(!is_maximally_entangled(&odd_attractive_state(), 1e-12));
    }

    #[test]
    fn examples_isolate_one_generator() {
        for kind in ExampleKind::ALL {
            let s = example_state(kind);
            assert!(is_maximally_entangled(&s, 1e-12), "{kind}");
            for id in InvariantId::GENERATORS {
                let v = id.evaluate(&s).unwrap().value.norm();
                if id == kind.designated() {
                    assert!(v > 1e-6, "{kind}: {id} = {v}");
                } else {
                    assert!(v < 1e-12, "{kind}: {id} = {v}");
                }
            }
        }
        let i2 = InvariantId::Deg4(Deg4::I2)
            .evaluate(&example_state(ExampleKind::I2Only))
            .unwrap();
        assert!((i2.value.norm().sqrt() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn w_block_weights() {
        let s = example_state(ExampleKind::Iabc1Only);
        let w = 12f64.sqrt().recip();
        for l in ["dud", "udd", "ddu"] {
            let a = s.amplitude(&BasisLabel::parse(l).unwrap());
            assert!((a - Complex64::new(w, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn cyclic_construction() {
        let s = cyclic_max_state(CyclicSpec { p: 1, r: 1 }).unwrap();
        assert_eq!(s.sector().n_modes(), 4);
        assert_eq!(s.support().count(), 4);
        assert!(is_maximally_entangled(&s, 1e-12));
        let s2 = cyclic_max_state(CyclicSpec { p: 1, r: 2 }).unwrap();
        assert_eq!((s2.sector().n_modes(), s2.sector().n_particles()), (8, 8));
        assert_eq!(s2.support().count(), 4);
        assert!(is_maximally_entangled(&s2, 1e-12));
    }

    #[test]
    fn cyclic_guards() {
        assert!(matches!(CyclicSpec::new(2, 1), Err(Error::Domain(_))));
        assert!(matches!(
            cyclic_max_state(CyclicSpec { p: 2, r: 1 }),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            cyclic_max_state(CyclicSpec { p: 3, r: 1 }),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            cyclic_max_state(CyclicSpec { p: 1, r: 3 }),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn binomial_oracle() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(3, 5), 0);
    }
}
