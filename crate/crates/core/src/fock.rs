//! Fixed-particle-number sectors of n spin-1/2 fermionic modes.
//!
//! Every mode carries a four-dimensional local space `|↑⟩, |↓⟩, |0⟩, |◇⟩`
//! (◇ = doubly occupied). A basis vector is the ordered creation word
//! `a↑† a↓† b↑† b↓† … |vac⟩` restricted to the occupied slots: ascending mode,
//! ↑ before ↓ inside a mode, rightmost operator applied first. All fermionic
//! signs in this crate are measured against that word.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Absolute tolerance on `Σ|amp|² − 1` for a state to count as normalized.
pub const NORM_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Up,
    Down,
}

impl Spin {
    pub fn flipped(self) -> Spin {
        match self {
            Spin::Up => Spin::Down,
            Spin::Down => Spin::Up,
        }
    }
}

/// Local occupation of one spatial mode. The declaration order is the
/// local-basis order used everywhere (rows/columns of local operators).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModeOccupation {
    Up,
    Down,
    Empty,
    Double,
}

impl ModeOccupation {
    pub const ALL: [ModeOccupation; 4] = [
        ModeOccupation::Up,
        ModeOccupation::Down,
        ModeOccupation::Empty,
        ModeOccupation::Double,
    ];

    pub fn particle_count(self) -> usize {
        match self {
            ModeOccupation::Up | ModeOccupation::Down => 1,
            ModeOccupation::Empty => 0,
            ModeOccupation::Double => 2,
        }
    }

    /// Row index in the local basis `(↑, ↓, 0, ◇)`.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i).copied()
    }

    /// State-file alphabet: `u`, `d`, `0`, `D`.
    pub fn symbol(self) -> char {
        match self {
            ModeOccupation::Up => 'u',
            ModeOccupation::Down => 'd',
            ModeOccupation::Empty => '0',
            ModeOccupation::Double => 'D',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'u' => Some(ModeOccupation::Up),
            'd' => Some(ModeOccupation::Down),
            '0' => Some(ModeOccupation::Empty),
            'D' => Some(ModeOccupation::Double),
            _ => None,
        }
    }

    pub fn is_single(self) -> bool {
        self.particle_count() == 1
    }

    pub fn contains(self, spin: Spin) -> bool {
        matches!(
            (self, spin),
            (ModeOccupation::Up, Spin::Up) | (ModeOccupation::Down, Spin::Down) | (ModeOccupation::Double, _)
        )
    }

    /// Eigenvalue of σ^z on a singly occupied mode, zero otherwise.
    pub fn spin_z(self) -> f64 {
        match self {
            ModeOccupation::Up => 1.0,
            ModeOccupation::Down => -1.0,
            _ => 0.0,
        }
    }

    fn from_slots(up: bool, down: bool) -> Self {
        match (up, down) {
            (true, true) => ModeOccupation::Double,
            (true, false) => ModeOccupation::Up,
            (false, true) => ModeOccupation::Down,
            (false, false) => ModeOccupation::Empty,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel(Vec<ModeOccupation>);

impl BasisLabel {
    pub fn new(occupations: Vec<ModeOccupation>) -> Self {
        BasisLabel(occupations)
    }

    /// Parses the state-file spelling, e.g. `"u0D"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                ModeOccupation::from_symbol(c)
                    .ok_or_else(|| Error::domain(format!("bad occupation symbol {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(BasisLabel)
    }

    pub fn occupations(&self) -> &[ModeOccupation] {
        &self.0
    }

    pub fn n_modes(&self) -> usize {
        self.0.len()
    }

    pub fn particle_count(&self) -> usize {
        self.0.iter().map(|o| o.particle_count()).sum()
    }

    pub fn mode(&self, i: usize) -> ModeOccupation {
        self.0[i]
    }

    pub fn with_mode(&self, i: usize, occ: ModeOccupation) -> BasisLabel {
        let mut v = self.0.clone();
        v[i] = occ;
        BasisLabel(v)
    }

    /// Label with modes rearranged so that mode `i` of the result is mode
    /// `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> BasisLabel {
        BasisLabel(perm.iter().map(|&p| self.0[p]).collect())
    }

    fn slot_occupied(&self, mode: usize, spin: Spin) -> bool {
        self.0[mode].contains(spin)
    }

    /// Number of occupied creation slots strictly before `(mode, spin)` in
    /// the canonical word.
    fn slots_before(&self, mode: usize, spin: Spin) -> usize {
        let before: usize = self.0[..mode].iter().map(|o| o.particle_count()).sum();
        match spin {
            Spin::Up => before,
            Spin::Down => before + usize::from(self.0[mode].contains(Spin::Up)),
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.0 {
            write!(f, "{}", o.symbol())?;
        }
        Ok(())
    }
}

#[derive(Debug)]
struct SectorData {
    n_modes: usize,
    n_particles: usize,
    basis: Vec<BasisLabel>,
    index: HashMap<BasisLabel, usize>,
}

/// All labels of `n_modes` modes with a fixed total particle count. Cheap to
/// clone; equality is by `(n_modes, n_particles)`.
#[derive(Clone, Debug)]
pub struct Sector(Arc<SectorData>);

impl PartialEq for Sector {
    fn eq(&self, other: &Self) -> bool {
        self.n_modes() == other.n_modes() && self.n_particles() == other.n_particles()
    }
}

impl Eq for Sector {}

/// Enumerates a sector in lexicographic order over `(↑ < ↓ < 0 < ◇)`, mode 0
/// most significant.
pub fn enumerate_sector(n_modes: usize, n_particles: usize) -> Result<Sector> {
    if n_modes == 0 {
        return Err(Error::domain("a sector needs at least one mode"));
    }
    if n_particles > 2 * n_modes {
        return Err(Error::domain(format!(
            "{n_particles} particles do not fit in {n_modes} modes"
        )));
    }
    let mut basis = Vec::new();
    let mut current = Vec::with_capacity(n_modes);
    fill(n_modes, n_particles, &mut current, &mut basis);
    let index = basis.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    Ok(Sector(Arc::new(SectorData {
        n_modes,
        n_particles,
        basis,
        index,
    })))
}

fn fill(
    remaining_modes: usize,
    remaining_particles: usize,
    current: &mut Vec<ModeOccupation>,
    out: &mut Vec<BasisLabel>,
) {
    if remaining_modes == 0 {
        if remaining_particles == 0 {
            out.push(BasisLabel(current.clone()));
        }
        return;
    }
    for occ in ModeOccupation::ALL {
        let c = occ.particle_count();
        // prune: the other modes can hold at most 2 each
        if c <= remaining_particles && remaining_particles - c <= 2 * (remaining_modes - 1) {
            current.push(occ);
            fill(remaining_modes - 1, remaining_particles - c, current, out);
            current.pop();
        }
    }
}

impl Sector {
    pub fn new(n_modes: usize, n_particles: usize) -> Result<Self> {
        enumerate_sector(n_modes, n_particles)
    }

    pub fn n_modes(&self) -> usize {
        self.0.n_modes
    }

    pub fn n_particles(&self) -> usize {
        self.0.n_particles
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.0.basis
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn position(&self, label: &BasisLabel) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.0.basis[i]
    }
}

/// Dense amplitude vector over a sector's basis.
#[derive(Clone, Debug)]
pub struct StateVector {
    sector: Sector,
    amps: Vec<Complex64>,
}

/// Builds a state from `(label, amplitude)` pairs; missing labels are zero.
/// Repeated labels accumulate.
pub fn state_from_amplitudes<I>(sector: &Sector, entries: I, normalize: bool) -> Result<StateVector>
where
    I: IntoIterator<Item = (BasisLabel, Complex64)>,
{
    let mut amps = vec![Complex64::new(0.0, 0.0); sector.dim()];
    for (label, a) in entries {
        let i = sector.position(&label).ok_or_else(|| {
            Error::domain(format!(
                "label {label} is not in sector ({} modes, {} particles)",
                sector.n_modes(),
                sector.n_particles()
            ))
        })?;
        amps[i] += a;
    }
    let state = StateVector {
        sector: sector.clone(),
        amps,
    };
    if normalize {
        state.normalized()
    } else {
        Ok(state)
    }
}

impl StateVector {
    pub fn from_vec(sector: &Sector, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != sector.dim() {
            return Err(Error::domain(format!(
                "{} amplitudes for a sector of dimension {}",
                amps.len(),
                sector.dim()
            )));
        }
        Ok(StateVector {
            sector: sector.clone(),
            amps,
        })
    }

    pub fn zero(sector: &Sector) -> Self {
        StateVector {
            sector: sector.clone(),
            amps: vec![Complex64::new(0.0, 0.0); sector.dim()],
        }
    }

    /// Convenience constructor from state-file spellings; the sector is
    /// inferred from the first label.
    pub fn from_labels(entries: &[(&str, Complex64)], normalize: bool) -> Result<Self> {
        let parsed = entries
            .iter()
            .map(|(s, a)| Ok((BasisLabel::parse(s)?, *a)))
            .collect::<Result<Vec<_>>>()?;
        let first = parsed.first().ok_or_else(|| Error::domain("no amplitudes given"))?;
        let sector = Sector::new(first.0.n_modes(), first.0.particle_count())?;
        state_from_amplitudes(&sector, parsed, normalize)
    }

    /// Uniform box in `[-1, 1]` for real and imaginary parts, then normalized.
    pub fn random<R: Rng + ?Sized>(sector: &Sector, rng: &mut R) -> Self {
        let amps = (0..sector.dim())
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        StateVector {
            sector: sector.clone(),
            amps,
        }
        .normalized()
        .expect("a random vector is nonzero")
    }

    pub fn sector(&self) -> &Sector {
        &self.sector
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Amplitude of `label`; zero for labels outside the sector.
    pub fn amplitude(&self, label: &BasisLabel) -> Complex64 {
        self.sector
            .position(label)
            .map_or(Complex64::new(0.0, 0.0), |i| self.amps[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisLabel, Complex64)> + '_ {
        self.sector.basis().iter().zip(self.amps.iter().copied())
    }

    /// Labels carrying a nonzero amplitude.
    pub fn support(&self) -> impl Iterator<Item = &BasisLabel> + '_ {
        self.iter().filter(|(_, a)| a.norm_sqr() > 0.0).map(|(l, _)| l)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= NORM_TOL
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::domain("cannot normalize the zero vector"));
        }
        Ok(self.scaled(Complex64::new(1.0 / n, 0.0)))
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        StateVector {
            sector: self.sector.clone(),
            amps: self.amps.iter().map(|a| a * c).collect(),
        }
    }

    /// Relabels modes: mode `i` of the result is mode `perm[i]` of `self`.
    pub fn permute_modes(&self, perm: &[usize]) -> Result<Self> {
        let n = self.sector.n_modes();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::domain(format!("{perm:?} is not a permutation of {n} modes")));
        }
        let mut out = StateVector::zero(&self.sector);
        for (label, a) in self.iter() {
            let j = self.sector.position(&label.permuted(perm)).expect("same sector");
            out.amps[j] = a;
        }
        Ok(out)
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }
}

pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.sector != b.sector {
        return Err(Error::domain("inner product across different sectors"));
    }
    Ok(a.amps.iter().zip(&b.amps).map(|(x, y)| x.conj() * y).sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderKind {
    Create,
    Annihilate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LadderFactor {
    pub mode: usize,
    pub spin: Spin,
    pub kind: LadderKind,
}

impl LadderFactor {
    pub fn create(mode: usize, spin: Spin) -> Self {
        LadderFactor {
            mode,
            spin,
            kind: LadderKind::Create,
        }
    }

    pub fn annihilate(mode: usize, spin: Spin) -> Self {
        LadderFactor {
            mode,
            spin,
            kind: LadderKind::Annihilate,
        }
    }
}

/// A product of ladder operators written left to right; the rightmost factor
/// acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LadderTerm {
    pub factors: Vec<LadderFactor>,
}

impl LadderTerm {
    pub fn new(factors: Vec<LadderFactor>) -> Self {
        LadderTerm { factors }
    }

    /// `c†_{to,s} c_{from,s}`
    pub fn hop(to: usize, from: usize, spin: Spin) -> Self {
        LadderTerm::new(vec![
            LadderFactor::create(to, spin),
            LadderFactor::annihilate(from, spin),
        ])
    }
}

/// Applies `term` to a basis label. Returns the image label and the sign
/// picked up by anticommuting each factor to its slot in the canonical word,
/// or `None` if the image vanishes.
pub fn apply_ladder(term: &LadderTerm, label: &BasisLabel) -> Option<(BasisLabel, i8)> {
    let mut current = label.clone();
    let mut sign = 1i8;
    for factor in term.factors.iter().rev() {
        if factor.mode >= current.n_modes() {
            return None;
        }
        let occupied = current.slot_occupied(factor.mode, factor.spin);
        let (up, down) = (
            current.slot_occupied(factor.mode, Spin::Up),
            current.slot_occupied(factor.mode, Spin::Down),
        );
        let (up, down) = match (factor.kind, occupied) {
            (LadderKind::Create, true) | (LadderKind::Annihilate, false) => return None,
            (LadderKind::Create, false) | (LadderKind::Annihilate, true) => match factor.spin {
                Spin::Up => (!up, down),
                Spin::Down => (up, !down),
            },
        };
        if current.slots_before(factor.mode, factor.spin) % 2 == 1 {
            sign = -sign;
        }
        current = current.with_mode(factor.mode, ModeOccupation::from_slots(up, down));
    }
    Some((current, sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ModeOccupation::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn single_mode_single_particle() {
        let s = enumerate_sector(1, 1).unwrap();
        let labels: Vec<String> = s.basis().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["u", "d"]);
    }

    #[test]
    fn two_mode_two_particle_order() {
        let s = enumerate_sector(2, 2).unwrap();
        let labels: Vec<String> = s.basis().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, ["uu", "ud", "du", "dd", "0D", "D0"]);
    }

    #[test]
    fn three_fermion_sector_has_twenty_labels() {
        assert_eq!(enumerate_sector(3, 3).unwrap().dim(), 20);
    }

    #[test]
    fn too_many_particles_rejected() {
        assert!(matches!(enumerate_sector(2, 5), Err(Error::Domain(_))));
        assert!(enumerate_sector(0, 0).is_err());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let a = enumerate_sector(4, 4).unwrap();
        let b = enumerate_sector(4, 4).unwrap();
        assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn normalizes_eq12_state() {
        let psi =
            StateVector::from_labels(&[("uu", c(1.0)), ("dd", c(1.0)), ("0D", c(1.0)), ("D0", c(1.0))], true).unwrap();
        for (l, a) in psi.iter() {
            let expect = if ["uu", "dd", "0D", "D0"].contains(&l.to_string().as_str()) {
                0.5
            } else {
                0.0
            };
            assert!((a - c(expect)).norm() < 1e-15, "{l}");
        }
        assert!(psi.is_normalized());
    }

    #[test]
    fn single_label_normalizes_to_one() {
        let psi = StateVector::from_labels(&[("uu", c(3.0))], true).unwrap();
        assert_eq!(psi.amplitude(&BasisLabel::parse("uu").unwrap()), c(1.0));
    }

    #[test]
    fn label_outside_sector_rejected() {
        let s = enumerate_sector(2, 2).unwrap();
        let r = state_from_amplitudes(&s, [(BasisLabel::parse("uuu").unwrap(), c(1.0))], false);
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn zero_vector_cannot_normalize() {
        let s = enumerate_sector(2, 2).unwrap();
        assert!(state_from_amplitudes(&s, [], true).is_err());
    }

    #[test]
    fn inner_products() {
        let uu = StateVector::from_labels(&[("uu", c(1.0))], true).unwrap();
        let dd = StateVector::from_labels(&[("dd", c(1.0))], true).unwrap();
        assert_eq!(inner_product(&uu, &dd).unwrap(), c(0.0));
        assert!((inner_product(&uu, &uu).unwrap() - c(1.0)).norm() < 1e-15);
        let h = 1.0 / 2f64.sqrt();
        let psi3 = StateVector::from_labels(&[("ud", c(h)), ("du", c(h))], false).unwrap();
        let psi4 = StateVector::from_labels(&[("D0", c(h)), ("0D", c(h))], false).unwrap();
        assert_eq!(inner_product(&psi3, &psi4).unwrap(), c(0.0));
        let other = StateVector::from_labels(&[("uuu", c(1.0))], true).unwrap();
        assert!(inner_product(&uu, &other).is_err());
    }

    #[test]
    fn create_on_vacuum_has_no_sign() {
        let vac = BasisLabel::new(vec![Empty, Empty]);
        let t = LadderTerm::new(vec![LadderFactor::create(0, Spin::Up)]);
        assert_eq!(apply_ladder(&t, &vac), Some((BasisLabel::new(vec![Up, Empty]), 1)));
    }

    #[test]
    fn pauli_exclusion() {
        let l = BasisLabel::new(vec![Up, Empty]);
        let t = LadderTerm::new(vec![LadderFactor::create(0, Spin::Up)]);
        assert_eq!(apply_ladder(&t, &l), None);
        let t = LadderTerm::new(vec![LadderFactor::annihilate(1, Spin::Up)]);
        assert_eq!(apply_ladder(&t, &l), None);
    }

    #[test]
    fn hop_sign_matches_hand_count() {
        // |↓↑⟩ = a↓† b↑†|vac⟩. c_{A↓} removes the leading a↓† with sign +1,
        // leaving b↑†|vac⟩; c†_{B↓} then lands after b↑† (one transposition).
        let l = BasisLabel::parse("du").unwrap();
        let t = LadderTerm::hop(1, 0, Spin::Down);
        assert_eq!(apply_ladder(&t, &l), Some((BasisLabel::parse("0D").unwrap(), -1)));
    }

    #[test]
    fn permute_modes_moves_amplitudes() {
        let psi = StateVector::from_labels(&[("u0D", c(1.0))], false).unwrap();
        let swapped = psi.permute_modes(&[1, 0, 2]).unwrap();
        assert_eq!(swapped.amplitude(&BasisLabel::parse("0uD").unwrap()), c(1.0));
        assert!(psi.permute_modes(&[0, 0, 1]).is_err());
    }
}
