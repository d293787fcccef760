//! The block-diagonal local SLOCC group.
//!
//! Particle-number superselection forces every local operator to be block
//! diagonal over `{↑,↓} ⊕ {0} ⊕ {◇}`. The determinant-one part is generated
//! by five traceless Hermitian matrices: the spin-block Paulis λ₁, λ₂, λ₃ and
//! the two diagonal λ₈ = diag(1,1,−2,0), λ₁₅ = diag(1,1,1,−3).

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fock::StateVector;

/// Default half-width of the coefficient box used by [`random_element`].
pub const DEFAULT_SCALE: f64 = 0.3;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    L1,
    L2,
    L3,
    L8,
    L15,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::L1,
        Generator::L2,
        Generator::L3,
        Generator::L8,
        Generator::L15,
    ];

    /// Accepts the conventional Gell-Mann-style indices 1, 2, 3, 8, 15.
    pub fn from_index(k: u32) -> Result<Self> {
        match k {
            1 => Ok(Generator::L1),
            2 => Ok(Generator::L2),
            3 => Ok(Generator::L3),
            8 => Ok(Generator::L8),
            15 => Ok(Generator::L15),
            _ => Err(Error::domain(format!("no generator λ{k}"))),
        }
    }
}

pub fn generator(kind: Generator) -> Matrix4<Complex64> {
    let mut m = Matrix4::zeros();
    match kind {
        Generator::L1 => {
            m[(0, 1)] = ONE;
            m[(1, 0)] = ONE;
        }
        Generator::L2 => {
            m[(0, 1)] = -I;
            m[(1, 0)] = I;
        }
        Generator::L3 => {
            m[(0, 0)] = ONE;
            m[(1, 1)] = -ONE;
        }
        Generator::L8 => {
            m[(0, 0)] = ONE;
            m[(1, 1)] = ONE;
            m[(2, 2)] = Complex64::new(-2.0, 0.0);
        }
        Generator::L15 => {
            m[(0, 0)] = ONE;
            m[(1, 1)] = ONE;
            m[(2, 2)] = ONE;
            m[(3, 3)] = Complex64::new(-3.0, 0.0);
        }
    }
    m
}

/// Coefficients of `(λ₁, λ₂, λ₃, λ₈, λ₁₅)` in the exponent.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct GeneratorCoefficients(pub [Complex64; 5]);

impl GeneratorCoefficients {
    pub fn zero() -> Self {
        Self([ZERO; 5])
    }

    pub fn single(kind: Generator, c: Complex64) -> Self {
        let mut out = Self::zero();
        out.0[Generator::ALL.iter().position(|&g| g == kind).unwrap()] = c;
        out
    }

    /// `Σ c_k λ_k` as a 4×4 matrix.
    pub fn matrix(&self) -> Matrix4<Complex64> {
        Generator::ALL
            .iter()
            .zip(self.0)
            .fold(Matrix4::zeros(), |acc, (&g, c)| acc + generator(g) * c)
    }
}

/// A 4×4 local operator in the `(↑, ↓, 0, ◇)` basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalOperator(pub Matrix4<Complex64>);

impl LocalOperator {
    pub fn identity() -> Self {
        LocalOperator(Matrix4::identity())
    }

    /// Assembles `spin ⊕ empty ⊕ double`.
    pub fn from_blocks(spin: Matrix2<Complex64>, empty: Complex64, double: Complex64) -> Self {
        let mut m = Matrix4::zeros();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&spin);
        m[(2, 2)] = empty;
        m[(3, 3)] = double;
        LocalOperator(m)
    }

    pub fn matrix(&self) -> &Matrix4<Complex64> {
        &self.0
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    /// True if no entry couples different particle-number blocks.
    pub fn is_block_diagonal(&self) -> bool {
        let block = |i: usize| if i < 2 { i / 2 } else { i - 1 };
        (0..4).all(|r| (0..4).all(|c| block(r) == block(c) || self.0[(r, c)] == ZERO))
    }

    pub fn determinant(&self) -> Complex64 {
        self.0.determinant()
    }

    pub fn compose(&self, other: &LocalOperator) -> LocalOperator {
        LocalOperator(self.0 * other.0)
    }
}

/// `exp(Σ c_k λ_k)`, evaluated blockwise in closed form.
///
/// The spin block is `tI + N` with `t = c₈ + c₁₅` and `N` traceless, so by
/// Cayley–Hamilton `N² = q²I` and `exp = e^t (cosh q · I + sinh q / q · N)`.
/// This holds for defective `N` too (`q = 0` gives `I + N`).
pub fn exponentiate(coeffs: &GeneratorCoefficients) -> LocalOperator {
    let [c1, c2, c3, c8, c15] = coeffs.0;
    let t = c8 + c15;
    let n = Matrix2::new(c3, c1 - I * c2, c1 + I * c2, -c3);
    let q2 = c1 * c1 + c2 * c2 + c3 * c3;
    let q = q2.sqrt();
    let (cosh, sinhc) = if q.norm() < 1e-4 {
        // series: cosh q = 1 + q²/2 + q⁴/24, sinh q / q = 1 + q²/6 + q⁴/120
        (
            ONE + q2 / 2.0 + q2 * q2 / 24.0 + q2 * q2 * q2 / 720.0,
            ONE + q2 / 6.0 + q2 * q2 / 120.0 + q2 * q2 * q2 / 5040.0,
        )
    } else {
        (q.cosh(), q.sinh() / q)
    };
    let spin = (Matrix2::identity() * cosh + n * sinhc) * t.exp();
    LocalOperator::from_blocks(spin, (c15 - c8 * 2.0).exp(), (c15 * -3.0).exp())
}

/// One local operator per mode.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub locals: Vec<LocalOperator>,
}

impl GroupElement {
    pub fn new(locals: Vec<LocalOperator>) -> Self {
        GroupElement { locals }
    }

    pub fn identity(n_modes: usize) -> Self {
        GroupElement::new(vec![LocalOperator::identity(); n_modes])
    }

    /// Acts with `op` on mode `mode` and with the identity elsewhere.
    pub fn single(n_modes: usize, mode: usize, op: LocalOperator) -> Self {
        let mut g = GroupElement::identity(n_modes);
        g.locals[mode] = op;
        g
    }

    pub fn n_modes(&self) -> usize {
        self.locals.len()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.n_modes() != other.n_modes() {
            return Err(Error::domain("composing elements on different mode counts"));
        }
        Ok(GroupElement::new(
            self.locals
                .iter()
                .zip(&other.locals)
                .map(|(a, b)| a.compose(b))
                .collect(),
        ))
    }
}

/// Which part of the local group a random element is drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// All five generators.
    Full,
    /// λ₁, λ₂, λ₃ only: SL(2) on the spin block, identity on 0 and ◇.
    Spin,
    /// λ₁, λ₂, λ₃, λ₈: the determinant-one group of a hardcore mode
    /// (◇ never occupied).
    Hardcore,
    /// Diagonal on `(0, ◇)` with unit determinant there, identity on spins.
    PairDiagonal,
}

fn draw<R: Rng>(rng: &mut R, scale: f64) -> Complex64 {
    if scale == 0.0 {
        return ZERO;
    }
    Complex64::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale))
}

/// Draws coefficients uniformly in the box `[−scale, scale]²` per generator
/// and exponentiates. Deterministic in `seed`.
pub fn random_element(n_modes: usize, scale: f64, seed: u64) -> GroupElement {
    random_element_in(n_modes, scale, seed, Subgroup::Full)
}

pub fn random_element_in(n_modes: usize, scale: f64, seed: u64, subgroup: Subgroup) -> GroupElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element_with(n_modes, scale, &mut rng, subgroup)
}

pub fn random_element_with<R: Rng>(n_modes: usize, scale: f64, rng: &mut R, subgroup: Subgroup) -> GroupElement {
    let locals = (0..n_modes).map(|_| random_local(scale, rng, subgroup)).collect();
    GroupElement::new(locals)
}

pub fn random_local<R: Rng>(scale: f64, rng: &mut R, subgroup: Subgroup) -> LocalOperator {
    let mut c: [Complex64; 5] = std::array::from_fn(|_| draw(rng, scale));
    match subgroup {
        Subgroup::Full => {}
        Subgroup::Spin => {
            c[3] = ZERO;
            c[4] = ZERO;
        }
        Subgroup::Hardcore => c[4] = ZERO,
        Subgroup::PairDiagonal => {
            // ε(λ₁₅ − λ₈) = diag(0, 0, 3ε, −3ε)
            c[..3].fill(ZERO);
            c[3] = -c[4];
        }
    }
    exponentiate(&GeneratorCoefficients(c))
}

/// Applies `g` mode by mode. Particle-conserving local operators commute
/// across modes, so no fermionic sign enters. The result is not normalized.
pub fn apply(g: &GroupElement, state: &StateVector) -> Result<StateVector> {
    let sector = state.sector();
    if g.n_modes() != sector.n_modes() {
        return Err(Error::domain(format!(
            "group element on {} modes applied to a {}-mode state",
            g.n_modes(),
            sector.n_modes()
        )));
    }
    let mut current = state.clone();
    for (mode, local) in g.locals.iter().enumerate() {
        if *local == LocalOperator::identity() {
            continue;
        }
        let mut next = StateVector::zero(sector);
        for (label, a) in current.iter() {
            if a == ZERO {
                continue;
            }
            let col = label.mode(mode).index();
            // block diagonality: only labels of equal local count are reachable
            for occ in crate::fock::ModeOccupation::ALL {
                let e = local.entry(occ.index(), col);
                if e == ZERO {
                    continue;
                }
                let image = label.with_mode(mode, occ);
                if let Some(j) = sector.position(&image) {
                    next.amps_mut()[j] += e * a;
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// `diag(1, 1, r e^{iφ}, r⁻¹ e^{−iφ})` on every mode. On a sector with `n`
/// modes and `m` particles it scales every amplitude by `(r e^{iφ})^{n−m}`.
pub fn scaling_element(n_modes: usize, r: f64, phi: f64) -> Result<GroupElement> {
    if r <= 0.0 || !r.is_finite() {
        return Err(Error::domain(format!("scaling factor must be positive, got {r}")));
    }
    let z = Complex64::from_polar(r, phi);
    let local = LocalOperator::from_blocks(Matrix2::identity(), z, z.inv());
    Ok(GroupElement::new(vec![local; n_modes]))
}

/// `exp(−6αλ₃ + 2αλ₈ + αλ₁₅) = diag(e^{−3α}, e^{9α}, e^{−3α}, e^{−3α})`.
///
/// Scales `r₁|↑⟩|θ⟩ + r₂|0⟩|φ⟩ + r₃|◇⟩|φ'⟩` by `e^{−3α}`.
pub fn bell_local_annihilator(alpha: Complex64) -> LocalOperator {
    exponentiate(&GeneratorCoefficients([ZERO, ZERO, alpha * -6.0, alpha * 2.0, alpha]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{enumerate_sector, inner_product, BasisLabel};

    fn taylor_exp(m: &Matrix4<Complex64>, terms: usize) -> Matrix4<Complex64> {
        let mut acc = Matrix4::identity();
        let mut term = Matrix4::identity();
        for k in 1..terms {
            term = term * m / Complex64::new(k as f64, 0.0);
            acc += term;
        }
        acc
    }

    fn close(a: &Matrix4<Complex64>, b: &Matrix4<Complex64>, tol: f64) -> bool {
        (a - b).iter().all(|z| z.norm() <= tol)
    }

    #[test]
    fn generators_are_hermitian_and_traceless() {
        for g in Generator::ALL {
            let m = generator(g);
            assert_eq!(m.trace(), ZERO, "{g:?}");
            assert_eq!(m.adjoint(), m, "{g:?}");
        }
        assert!(Generator::from_index(4).is_err());
        assert_eq!(Generator::from_index(15).unwrap(), Generator::L15);
    }

    #[test]
    fn lambda3_and_lambda15_entries() {
        let l3 = generator(Generator::L3);
        assert_eq!(l3.diagonal().as_slice(), &[ONE, -ONE, ZERO, ZERO]);
        let l15 = generator(Generator::L15);
        assert_eq!(l15.diagonal().as_slice(), &[ONE, ONE, ONE, Complex64::new(-3.0, 0.0)]);
    }

    #[test]
    fn zero_exponent_is_identity() {
        assert_eq!(exponentiate(&GeneratorCoefficients::zero()), LocalOperator::identity());
    }

    #[test]
    fn exchange_phase() {
        let c = GeneratorCoefficients::single(Generator::L15, I * std::f64::consts::FRAC_PI_4);
        let e = exponentiate(&c);
        let p = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let q = Complex64::from_polar(1.0, -3.0 * std::f64::consts::FRAC_PI_4);
        let want = Matrix4::from_diagonal(&nalgebra::Vector4::new(p, p, p, q));
        assert!(close(e.matrix(), &want, 1e-15));
    }

    #[test]
    fn closed_form_matches_taylor_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let c = GeneratorCoefficients(std::array::from_fn(|_| draw(&mut rng, 0.6)));
            let e = exponentiate(&c);
            assert!(close(e.matrix(), &taylor_exp(&c.matrix(), 30), 1e-12));
            assert!((e.determinant() - ONE).norm() < 1e-9);
            assert!(e.is_block_diagonal());
        }
    }

    #[test]
    fn nilpotent_spin_block() {
        // c1 = 1, c2 = i gives N = [[0, 2], [0, 0]], q = 0
        let c = GeneratorCoefficients([ONE, I, ZERO, ZERO, ZERO]);
        let e = exponentiate(&c);
        assert!(close(e.matrix(), &taylor_exp(&c.matrix(), 30), 1e-14));
    }

    #[test]
    fn random_element_contract() {
        assert_eq!(random_element(3, 0.0, 5), GroupElement::identity(3));
        assert_eq!(random_element(3, 0.3, 42), random_element(3, 0.3, 42));
        for l in random_element(2, 0.3, 7).locals {
            assert!(l.is_block_diagonal());
            assert!((l.determinant() - ONE).norm() < 1e-9);
        }
    }

    #[test]
    fn restricted_subgroups_have_expected_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = random_local(0.5, &mut rng, Subgroup::Spin);
        assert_eq!(s.entry(2, 2), ONE);
        assert_eq!(s.entry(3, 3), ONE);
        let p = random_local(0.5, &mut rng, Subgroup::PairDiagonal);
        assert_eq!(p.entry(0, 1), ZERO);
        assert!((p.entry(0, 0) - ONE).norm() < 1e-15);
        assert!((p.entry(2, 2) * p.entry(3, 3) - ONE).norm() < 1e-14);
        let h = random_local(0.5, &mut rng, Subgroup::Hardcore);
        assert_eq!(h.entry(3, 3), ONE);
    }

    #[test]
    fn g123_commutes_with_g815() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let a = exponentiate(&GeneratorCoefficients([
                draw(&mut rng, 0.5),
                draw(&mut rng, 0.5),
                draw(&mut rng, 0.5),
                ZERO,
                ZERO,
            ]));
            let b = exponentiate(&GeneratorCoefficients([
                ZERO,
                ZERO,
                ZERO,
                draw(&mut rng, 0.5),
                draw(&mut rng, 0.5),
            ]));
            assert!(close(&(a.0 * b.0), &(b.0 * a.0), 1e-13));
        }
    }

    #[test]
    fn exchange_phase_acts_per_mode() {
        let c = GeneratorCoefficients::single(Generator::L15, I * std::f64::consts::FRAC_PI_4);
        let g = GroupElement::new(vec![exponentiate(&c), LocalOperator::identity()]);
        let s = enumerate_sector(2, 2).unwrap();
        let psi = StateVector::random(&s, &mut ChaCha8Rng::seed_from_u64(1));
        let out = apply(&g, &psi).unwrap();
        let d0 = BasisLabel::parse("D0").unwrap();
        let ud = BasisLabel::parse("ud").unwrap();
        let want_d0 = psi.amplitude(&d0) * Complex64::from_polar(1.0, -3.0 * std::f64::consts::FRAC_PI_4);
        let want_ud = psi.amplitude(&ud) * Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        assert!((out.amplitude(&d0) - want_d0).norm() < 1e-15);
        assert!((out.amplitude(&ud) - want_ud).norm() < 1e-15);
    }

    #[test]
    fn apply_composes() {
        let s = enumerate_sector(3, 3).unwrap();
        let psi = StateVector::random(&s, &mut ChaCha8Rng::seed_from_u64(2));
        let g1 = random_element(3, 0.3, 1);
        let g2 = random_element(3, 0.3, 2);
        let stepwise = apply(&g2, &apply(&g1, &psi).unwrap()).unwrap();
        let joint = apply(&g2.compose(&g1).unwrap(), &psi).unwrap();
        for (a, b) in stepwise.amplitudes().iter().zip(joint.amplitudes()) {
            assert!((a - b).norm() < 1e-10);
        }
        assert!(apply(&random_element(2, 0.3, 1), &psi).is_err());
    }

    #[test]
    fn scaling_element_exponent_is_modes_minus_particles() {
        let s21 = enumerate_sector(2, 1).unwrap();
        let psi = StateVector::random(&s21, &mut ChaCha8Rng::seed_from_u64(4));
        let out = apply(&scaling_element(2, 2.0, 0.0).unwrap(), &psi).unwrap();
        for (a, b) in psi.amplitudes().iter().zip(out.amplitudes()) {
            assert!((a * 2.0 - b).norm() < 1e-15);
        }
        let s33 = enumerate_sector(3, 3).unwrap();
        let psi = StateVector::random(&s33, &mut ChaCha8Rng::seed_from_u64(5));
        let out = apply(&scaling_element(3, 2.0, 0.7).unwrap(), &psi).unwrap();
        assert!((inner_product(&psi, &out).unwrap() - ONE).norm() < 1e-12);
        assert!(scaling_element(3, 0.0, 0.0).is_err());
    }

    #[test]
    fn bell_local_annihilator_is_diagonal_with_unit_det() {
        let a = Complex64::new(0.7, 0.3);
        let m = bell_local_annihilator(a);
        let e3 = (a * -3.0).exp();
        let want = nalgebra::Vector4::new(e3, (a * 9.0).exp(), e3, e3);
        assert!(close(m.matrix(), &Matrix4::from_diagonal(&want), 1e-12));
        assert!((m.determinant() - ONE).norm() < 1e-9);
        assert_eq!(bell_local_annihilator(ZERO), LocalOperator::identity());
    }
}
