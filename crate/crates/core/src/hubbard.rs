//! Cyclic three-site Ising–Hubbard chain: Hamiltonian, exact
//! diagonalization, field sweeps and peak location.

use std::io::Write;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::fock::{
    apply_ladder, enumerate_sector, inner_product, BasisLabel, LadderFactor, LadderTerm, ModeOccupation, Sector, Spin,
    StateVector,
};
use crate::invariants::{i_deg4, reduced_density_matrix, three_tangle, Deg4};

pub const SITES: usize = 3;

/// How the on-site term `−K Σ_j n_{j,s} n_{j,−s}` counts a doubly occupied
/// site.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OnsiteConvention {
    /// Once per site.
    #[default]
    SingleCount,
    /// Once per spin, i.e. twice per site.
    DoubleCount,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HamiltonianParams {
    pub j: f64,
    pub b: f64,
    pub k: f64,
    pub f: f64,
    pub p_down: f64,
    pub p_up: f64,
    pub onsite: OnsiteConvention,
}

impl HamiltonianParams {
    /// Parameters of the reference experiment at zero field.
    pub fn reference() -> Self {
        Self::with_hopping(1.0, 2.99507, 5e-3, 5e-6)
    }

    /// Spin-antisymmetric hopping `p_down = p = −p_up`.
    pub fn with_hopping(j: f64, k: f64, f: f64, p: f64) -> Self {
        HamiltonianParams {
            j,
            b: 0.0,
            k,
            f,
            p_down: p,
            p_up: -p,
            onsite: OnsiteConvention::SingleCount,
        }
    }

    pub fn at_field(self, b: f64) -> Self {
        HamiltonianParams { b, ..self }
    }

    fn validate(&self) -> Result<()> {
        let all = [self.j, self.b, self.k, self.f, self.p_down, self.p_up];
        if all.iter().all(|x| x.is_finite()) {
            Ok(())
        } else {
            Err(Error::domain("Hamiltonian parameters must be finite"))
        }
    }
}

impl Default for HamiltonianParams {
    fn default() -> Self {
        Self::reference()
    }
}

/// Dense Hamiltonian on the three-fermion, three-site sector.
#[derive(Clone, Debug)]
pub struct HamiltonianMatrix {
    sector: Sector,
    matrix: DMatrix<Complex64>,
}

impl HamiltonianMatrix {
    pub fn sector(&self) -> &Sector {
        &self.sector
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn element(&self, row: &str, col: &str) -> Result<Complex64> {
        let pos = |s: &str| -> Result<usize> {
            let l = BasisLabel::parse(s)?;
            self.sector
                .position(&l)
                .ok_or_else(|| Error::domain(format!("{s} is not in the sector")))
        };
        Ok(self.matrix[(pos(row)?, pos(col)?)])
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let m = &self.matrix;
        (0..m.nrows()).all(|i| (0..m.ncols()).all(|j| (m[(i, j)] - m[(j, i)].conj()).norm() <= tol))
    }
}

/// `σ^z` eigenvalue on a site. The field is oriented so that a positive `B`
/// favours ↓, which is what drives the chain into `|↓↓↓⟩` at strong field;
/// the Ising term is insensitive to the orientation.
fn sigma_z(o: ModeOccupation) -> f64 {
    match o {
        ModeOccupation::Up => -1.0,
        ModeOccupation::Down => 1.0,
        _ => 0.0,
    }
}

fn off_diagonal_terms(params: &HamiltonianParams) -> Vec<(LadderTerm, f64)> {
    let mut terms = Vec::new();
    for j in 0..SITES {
        // σx_j = c†_{j↑} c_{j↓} + c†_{j↓} c_{j↑}
        for (to, from) in [(Spin::Up, Spin::Down), (Spin::Down, Spin::Up)] {
            let t = LadderTerm::new(vec![LadderFactor::create(j, to), LadderFactor::annihilate(j, from)]);
            terms.push((t, params.f));
        }
        let next = (j + 1) % SITES;
        for (spin, p) in [(Spin::Down, params.p_down), (Spin::Up, params.p_up)] {
            terms.push((LadderTerm::hop(j, next, spin), p));
            terms.push((LadderTerm::hop(next, j, spin), p));
        }
    }
    terms
}

pub fn build_hamiltonian(params: &HamiltonianParams) -> Result<HamiltonianMatrix> {
    params.validate()?;
    let sector = enumerate_sector(SITES, 3)?;
    let dim = sector.dim();
    let mut h = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    let doubles_weight = match params.onsite {
        OnsiteConvention::SingleCount => 1.0,
        OnsiteConvention::DoubleCount => 2.0,
    };
    let ladders = off_diagonal_terms(params);
    for (col, label) in sector.basis().iter().enumerate() {
        let occ = label.occupations();
        let mut diag = 0.0;
        for j in 0..SITES {
            let sz = sigma_z(occ[j]);
            diag -= params.j * sz * sigma_z(occ[(j + 1) % SITES]);
            diag -= params.b * sz;
            if occ[j] == ModeOccupation::Double {
                diag -= params.k * doubles_weight;
            }
        }
        h[(col, col)] += Complex64::new(diag, 0.0);
        for (term, coeff) in &ladders {
            if *coeff == 0.0 {
                continue;
            }
            if let Some((out, sign)) = apply_ladder(term, label) {
                let row = sector.position(&out).expect("particle number is conserved");
                h[(row, col)] += Complex64::new(coeff * f64::from(sign), 0.0);
            }
        }
    }
    Ok(HamiltonianMatrix { sector, matrix: h })
}

/// Largest-magnitude amplitude made real and positive.
fn fix_gauge(v: &DVector<Complex64>) -> Vec<Complex64> {
    let pivot = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = if pivot.norm() > 0.0 {
        pivot.conj() / pivot.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    v.iter().map(|a| a * phase).collect()
}

/// Eigenpair of a Hamiltonian.
#[derive(Clone, Debug)]
pub struct Eigenpair {
    pub energy: f64,
    pub state: StateVector,
}

/// Lowest `k` eigenpairs, energies ascending.
pub fn spectrum(h: &HamiltonianMatrix, k: usize) -> Result<Vec<Eigenpair>> {
    let dim = h.matrix.nrows();
    if k == 0 || k > dim {
        return Err(Error::domain(format!("k must lie in 1..={dim}")));
    }
    let eig = SymmetricEigen::new(h.matrix.clone());
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    order
        .into_iter()
        .take(k)
        .enumerate()
        .map(|(rank, i)| {
            let v = eig.eigenvectors.column(i).into_owned();
            let mut amps = fix_gauge(&v);
            let mut energy = eig.eigenvalues[i];
            if rank == 0 {
                if let Some((e, x)) = refine_ground(&h.matrix, &amps) {
                    energy = e;
                    amps = x;
                }
            }
            Ok(Eigenpair {
                energy,
                state: StateVector::from_vec(&h.sector, amps)?.normalized()?,
            })
        })
        .collect()
}

/// Rayleigh-quotient iteration in double-double arithmetic.
///
/// Near level crossings the gap drops to ~1e-10 and an f64 eigenvector is
/// only good to about `ε‖H‖/gap`, which is enough to break identities such
/// as `I1 = −I2` at the 1e-5 level. Only real matrices are refined; `None`
/// leaves the f64 result in place.
fn refine_ground(h: &DMatrix<Complex64>, guess: &[Complex64]) -> Option<(f64, Vec<Complex64>)> {
    let n = h.nrows();
    if h.iter().any(|z| z.im != 0.0) || guess.iter().map(|z| z.im * z.im).sum::<f64>() > 1e-12 {
        return None;
    }
    let a: Vec<Vec<TwoFloat>> = (0..n)
        .map(|r| (0..n).map(|c| TwoFloat::from(h[(r, c)].re)).collect())
        .collect();
    let mut x: Vec<TwoFloat> = guess.iter().map(|z| TwoFloat::from(z.re)).collect();
    let mut sigma = TwoFloat::from(0.0);
    for _ in 0..3 {
        normalize_dd(&mut x)?;
        let hx: Vec<TwoFloat> = a.iter().map(|row| dot_dd(row, &x)).collect();
        sigma = dot_dd(&x, &hx);
        let mut shifted = a.clone();
        for (r, row) in shifted.iter_mut().enumerate() {
            row[r] -= sigma;
        }
        x = solve_dd(shifted, x);
    }
    normalize_dd(&mut x)?;
    let amps = x.iter().map(|&t| Complex64::new(f64::from(t), 0.0)).collect();
    Some((f64::from(sigma), amps))
}

fn dot_dd(a: &[TwoFloat], b: &[TwoFloat]) -> TwoFloat {
    a.iter().zip(b).fold(TwoFloat::from(0.0), |acc, (&p, &q)| acc + p * q)
}

fn normalize_dd(x: &mut [TwoFloat]) -> Option<()> {
    let norm = dot_dd(x, x).sqrt();
    let approx = f64::from(norm);
    if !approx.is_finite() || approx <= 0.0 {
        return None;
    }
    // Keep the largest component positive so the gauge survives refinement.
    let pivot = x
        .iter()
        .copied()
        .max_by(|p, q| p.abs().partial_cmp(&q.abs()).unwrap())?;
    let scale = if pivot < 0.0 { -norm } else { norm };
    x.iter_mut().for_each(|t| *t /= scale);
    Some(())
}

/// Gaussian elimination with partial pivoting. A zero pivot (shift exactly
/// on an eigenvalue) is nudged, which is harmless for inverse iteration.
#[allow(clippy::needless_range_loop)]
fn solve_dd(mut a: Vec<Vec<TwoFloat>>, mut b: Vec<TwoFloat>) -> Vec<TwoFloat> {
    let n = b.len();
    let tiny = TwoFloat::from(1e-60);
    for col in 0..n {
        let p = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, p);
        b.swap(col, p);
        if a[col][col] == 0.0 {
            a[col][col] = tiny;
        }
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let t = f * a[col][c];
                a[r][c] -= t;
            }
            let t = f * b[col];
            b[r] -= t;
        }
    }
    for r in (0..n).rev() {
        let mut s = b[r];
        for c in r + 1..n {
            s -= a[r][c] * b[c];
        }
        b[r] = s / a[r][r];
    }
    b
}

/// Ground-state measures at one field value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub b: f64,
    /// `4|I1 − I2|^{1/2}`.
    pub measure_i12: f64,
    /// `2|τ|^{1/2}`.
    pub measure_tau: f64,
    /// Entropy of site 0.
    pub entropy: f64,
    pub gap: f64,
    pub ground_energy: f64,
}

/// Measures of a three-fermion state as `(i12, tau, entropy)`.
pub fn measures(state: &StateVector) -> Result<(f64, f64, f64)> {
    let i1 = i_deg4(state, Deg4::I1)?.value;
    let i2 = i_deg4(state, Deg4::I2)?.value;
    let tau = three_tangle(state)?.value;
    let e = reduced_density_matrix(state, 0)?.entropy();
    Ok((4.0 * (i1 - i2).norm().sqrt(), 2.0 * tau.norm().sqrt(), e))
}

pub fn ground_row(params: &HamiltonianParams) -> Result<SweepRow> {
    let h = build_hamiltonian(params)?;
    let pairs = spectrum(&h, 2)?;
    let (i12, tau, e) = measures(&pairs[0].state)?;
    Ok(SweepRow {
        b: params.b,
        measure_i12: i12,
        measure_tau: tau,
        entropy: e,
        gap: pairs[1].energy - pairs[0].energy,
        ground_energy: pairs[0].energy,
    })
}

/// Ground-state rows for each field value, in input order.
pub fn sweep(base: &HamiltonianParams, b_values: &[f64]) -> Result<Vec<SweepRow>> {
    if b_values.is_empty() {
        return Err(Error::domain("no field values to sweep"));
    }
    b_values.par_iter().map(|&b| ground_row(&base.at_field(b))).collect()
}

/// `points` uniform values on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![lo],
        n => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

pub const DEFAULT_B_MAX: f64 = 3e-5;
pub const DEFAULT_POINTS: usize = 601;

pub fn default_grid() -> Vec<f64> {
    linspace(0.0, DEFAULT_B_MAX, DEFAULT_POINTS)
}

pub const CSV_HEADER: &str = "B,measure_i12,measure_tau,entropy,gap,ground_energy";

/// Twelve significant digits, `-0` folded to `0`.
pub fn format_sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.11e}")
}

pub fn write_csv<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let cells = [r.b, r.measure_i12, r.measure_tau, r.entropy, r.gap, r.ground_energy].map(format_sig12);
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeakQuantity {
    I12,
    Tau,
    Entropy,
}

impl PeakQuantity {
    pub fn of(self, row: &SweepRow) -> f64 {
        match self {
            PeakQuantity::I12 => row.measure_i12,
            PeakQuantity::Tau => row.measure_tau,
            PeakQuantity::Entropy => row.entropy,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Peak {
    pub b: f64,
    pub value: f64,
    /// Set when the scan found no interior maximum.
    pub at_endpoint: bool,
}

pub const PEAK_SCAN_POINTS: usize = 101;
pub const PEAK_TOL: f64 = 1e-11;

/// Coarse scan followed by golden-section refinement around the best point.
pub fn find_peak(base: &HamiltonianParams, interval: (f64, f64), quantity: PeakQuantity) -> Result<Peak> {
    let (lo, hi) = interval;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain("peak interval must satisfy lo < hi"));
    }
    let eval = |b: f64| -> Result<f64> { Ok(quantity.of(&ground_row(&base.at_field(b))?)) };
    let grid = linspace(lo, hi, PEAK_SCAN_POINTS);
    let values = grid.iter().map(|&b| eval(b)).collect::<Result<Vec<_>>>()?;
    let best = (0..values.len())
        .max_by(|&a, &b| values[a].total_cmp(&values[b]))
        .expect("nonempty scan");
    if best == 0 || best == grid.len() - 1 {
        return Ok(Peak {
            b: grid[best],
            value: values[best],
            at_endpoint: true,
        });
    }
    let (mut a, mut d) = (grid[best - 1], grid[best + 1]);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut b = d - inv_phi * (d - a);
    let mut c = a + inv_phi * (d - a);
    let (mut fb, mut fc) = (eval(b)?, eval(c)?);
    while d - a > PEAK_TOL {
        if fb >= fc {
            d = c;
            c = b;
            fc = fb;
            b = d - inv_phi * (d - a);
            fb = eval(b)?;
        } else {
            a = b;
            b = c;
            fb = fc;
            c = a + inv_phi * (d - a);
            fc = eval(c)?;
        }
    }
    let x = 0.5 * (a + d);
    let fx = eval(x)?;
    let (b_star, value) = [(x, fx), (b, fb), (c, fc), (grid[best], values[best])]
        .into_iter()
        .max_by(|p, q| p.1.total_cmp(&q.1))
        .unwrap();
    Ok(Peak {
        b: b_star,
        value,
        at_endpoint: false,
    })
}

/// The twelve-term paired state, normalized.
pub fn psi_p() -> StateVector {
    let (m, p) = (Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0));
    let entries = [
        ("Du0", m),
        ("u0D", m),
        ("0Du", m),
        ("uD0", p),
        ("0uD", p),
        ("D0u", p),
        ("D0d", m),
        ("dD0", m),
        ("0dD", m),
        ("Dd0", p),
        ("0Dd", p),
        ("d0D", p),
    ];
    StateVector::from_labels(&entries, true).expect("fixed labels")
}

pub fn psi_p_overlap(ground: &StateVector) -> Result<f64> {
    Ok(inner_product(&psi_p(), ground)?.norm())
}
