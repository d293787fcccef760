//! Numerical cross-checks between recipe polynomials and the hand-written
//! invariants: proportionality, linear independence, index balance, and the
//! degree-16 search.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::forms::{numeric_forms, three_fermion_sector, FormKind};
use super::poly::{SparsePolynomial, Symbol, VarFamily};
use super::recipe::{evaluate_at, evaluate_recipe_with, NamedRecipe, TransvectionRecipe};
use crate::error::{Error, Result};
use crate::fock::{ModeOccupation, StateVector};
use crate::invariants::{Abc, Deg4, InvariantId, Localized, Pair};

/// Relative tolerance on the ratio between a recipe and its reference.
pub const RATIO_TOL: f64 = 1e-8;
/// Singular values below this fraction of the largest count as zero.
pub const RANK_TOL: f64 = 1e-8;

/// Random normalized three-fermion state.
pub fn random_three_fermion_state<R: Rng>(rng: &mut R) -> StateVector {
    StateVector::random(&three_fermion_sector(), rng)
}

/// Zeroes every amplitude whose mode-A occupation is not single.
pub fn localize_a(state: &StateVector) -> StateVector {
    let amps = state
        .iter()
        .map(|(l, a)| {
            if l.mode(0).is_single() {
                a
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    StateVector::from_vec(state.sector(), amps).expect("same sector")
}

/// Additionally zeroes amplitudes where B or C is singly occupied.
pub fn localize_a_paired_bc(state: &StateVector) -> StateVector {
    let amps = state
        .iter()
        .map(|(l, a)| {
            let ok = l.mode(0).is_single()
                && l.occupations()[1..]
                    .iter()
                    .all(|o| matches!(o, ModeOccupation::Empty | ModeOccupation::Double));
            if ok {
                a
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    StateVector::from_vec(state.sector(), amps).expect("same sector")
}

/// Finds `c` with `poly(ψ) = c · reference(ψ)` over random states.
///
/// Fails with `Indeterminate` when the reference vanishes on every sample
/// and with `Mismatch` when the ratios disagree beyond [`RATIO_TOL`].
pub fn proportionality_constant<F>(
    poly: &SparsePolynomial,
    reference: F,
    n_samples: usize,
    seed: u64,
) -> Result<Complex64>
where
    F: Fn(&StateVector) -> Result<Complex64>,
{
    proportionality_with(|s| evaluate_at(poly, s), reference, n_samples, seed)
}

/// Same as [`proportionality_constant`] for an arbitrary evaluator.
pub fn proportionality_with<P, F>(poly: P, reference: F, n_samples: usize, seed: u64) -> Result<Complex64>
where
    P: Fn(&StateVector) -> Result<Complex64>,
    F: Fn(&StateVector) -> Result<Complex64>,
{
    if n_samples < 3 {
        return Err(Error::domain("need at least three samples"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let s = random_three_fermion_state(&mut rng);
        pairs.push((poly(&s)?, reference(&s)?));
    }
    let scale = pairs.iter().map(|(_, r)| r.norm()).fold(0.0, f64::max);
    if scale == 0.0 || pairs.iter().all(|(_, r)| r.norm() <= 1e-300) {
        return Err(Error::Indeterminate("reference vanishes on every sample".into()));
    }
    // Use the sample with the largest reference as the anchor.
    let anchor = pairs.iter().max_by(|a, b| a.1.norm().total_cmp(&b.1.norm())).unwrap();
    let c = anchor.0 / anchor.1;
    for (p, r) in &pairs {
        let dev = (p - c * r).norm();
        if dev > RATIO_TOL * p.norm().max((c * r).norm()).max(1e-300) {
            return Err(Error::Mismatch(format!(
                "ratio {} deviates from {c} (value {p}, reference {r})",
                p / r
            )));
        }
    }
    Ok(c)
}

/// Numerical rank of a matrix whose rows are value vectors. Rows are
/// normalized first so differing degrees do not skew the threshold.
pub fn numerical_rank(rows: &[Vec<Complex64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let n = rows[0].len();
    let m = DMatrix::from_fn(rows.len(), n, |i, j| {
        let norm = rows[i].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            rows[i][j] / norm
        }
    });
    let sv = m.singular_values();
    let max = sv.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOL * max).count()
}

/// Evaluates each function at `n_samples` random states and returns the
/// rank of the resulting matrix.
pub fn rank_of_evaluators(evaluators: &[&dyn Fn(&StateVector) -> Complex64], n_samples: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<StateVector> = (0..n_samples).map(|_| random_three_fermion_state(&mut rng)).collect();
    let rows: Vec<Vec<Complex64>> = evaluators.iter().map(|f| states.iter().map(f).collect()).collect();
    numerical_rank(&rows)
}

/// Rank of a set of amplitude polynomials over random evaluations.
pub fn rank_of_set(polys: &[SparsePolynomial], n_samples: usize, seed: u64) -> Result<usize> {
    if n_samples < polys.len() {
        return Err(Error::domain("need at least as many samples as polynomials"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<StateVector> = (0..n_samples).map(|_| random_three_fermion_state(&mut rng)).collect();
    let rows = polys
        .iter()
        .map(|p| states.iter().map(|s| evaluate_at(p, s)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(numerical_rank(&rows))
}

/// Hand-coded counterpart of a named recipe, evaluated on the support the
/// recipe is meant for.
pub fn reference_value(recipe: NamedRecipe, state: &StateVector) -> Result<Complex64> {
    let id = match recipe {
        NamedRecipe::I1 => InvariantId::Deg4(Deg4::I1),
        NamedRecipe::I2 => InvariantId::Deg4(Deg4::I2),
        NamedRecipe::IBC => InvariantId::Pair(Pair::BC),
        NamedRecipe::IAC => InvariantId::Pair(Pair::AC),
        NamedRecipe::IAB => InvariantId::Pair(Pair::AB),
        NamedRecipe::IABC1 => InvariantId::Abc(Abc::I1),
        NamedRecipe::IABC2 => InvariantId::Abc(Abc::I2),
        NamedRecipe::IA1 => InvariantId::Localized(Localized::A1),
        NamedRecipe::IA2a | NamedRecipe::IA2b => InvariantId::Localized(Localized::A2),
        NamedRecipe::IAL => InvariantId::Localized(Localized::AL),
    };
    let projected = match recipe {
        NamedRecipe::IAL => localize_a_paired_bc(state),
        r if r.is_localized() => localize_a(state),
        _ => state.clone(),
    };
    Ok(id.evaluate(&projected)?.value)
}

/// Per-monomial count of `(↑, ↓, 0, ◇)` over all modes, or per mode.
fn occupation_counts(m: &super::poly::Monomial) -> Option<[[u32; 4]; 3]> {
    let sector = three_fermion_sector();
    let mut counts = [[0u32; 4]; 3];
    for (s, e) in m.factors() {
        match s {
            Symbol::Amplitude(i) => {
                for (mode, o) in sector.label(usize::from(i)).occupations().iter().enumerate() {
                    counts[mode][o.index()] += u32::from(e);
                }
            }
            Symbol::Aux { .. } => return None,
        }
    }
    Some(counts)
}

/// Every monomial carries equal numbers of ↑, ↓, 0 and ◇ indices in total.
pub fn is_index_balanced(poly: &SparsePolynomial) -> bool {
    poly.terms().all(|(m, _)| {
        occupation_counts(m).is_some_and(|c| {
            let total: Vec<u32> = (0..4).map(|k| c.iter().map(|row| row[k]).sum()).collect();
            total.iter().all(|&t| t == total[0])
        })
    })
}

/// Stronger per-mode form: in every mode, 0 and ◇ each occur `d/4` times
/// and single occupancy `d/2` times, which makes each monomial invariant
/// under the diagonal generators.
pub fn is_mode_balanced(poly: &SparsePolynomial) -> bool {
    poly.terms().all(|(m, _)| {
        let d = m.degree();
        occupation_counts(m).is_some_and(|c| {
            d % 4 == 0
                && c.iter()
                    .all(|row| row[2] == d / 4 && row[3] == d / 4 && row[0] + row[1] == d / 2)
        })
    })
}

/// Outcome of the degree-16 search.
#[derive(Clone, Debug)]
pub struct Degree16Report {
    pub recipes_tried: usize,
    pub nonzero: usize,
    /// Largest relative least-squares residual against products of the
    /// seven generators.
    pub max_residual: f64,
    /// Recipes whose values leave that span.
    pub outside_span: Vec<String>,
}

/// Random balanced degree-16 recipe: four `M` factors and twelve linear
/// forms with `t` each of m12, m31, m23 and `4 − t` each of m21, m13, m32,
/// paired at random within each variable family.
pub fn random_degree16_recipe<R: Rng>(t: usize, rng: &mut R) -> TransvectionRecipe {
    assert!(t <= 4);
    let mut kinds = vec![FormKind::M; 4];
    for (k, n) in [
        (FormKind::M12, t),
        (FormKind::M31, t),
        (FormKind::M23, t),
        (FormKind::M21, 4 - t),
        (FormKind::M13, 4 - t),
        (FormKind::M32, 4 - t),
    ] {
        kinds.extend(std::iter::repeat_n(k, n));
    }
    let mut indices: Vec<Vec<char>> = kinds.iter().map(|k| vec![' '; k.families().len()]).collect();
    let mut letters = ('a'..='z').chain('A'..='L');
    for family in VarFamily::ALL {
        let mut slots: Vec<(usize, usize)> = Vec::new();
        for (f, k) in kinds.iter().enumerate() {
            if let Some(pos) = k.families().iter().position(|&w| w == family) {
                slots.push((f, pos));
            }
        }
        slots.shuffle(rng);
        for pair in slots.chunks(2) {
            let c = letters.next().expect("enough index letters");
            for &(f, pos) in pair {
                indices[f][pos] = c;
            }
        }
    }
    let text: Vec<String> = kinds
        .iter()
        .zip(&indices)
        .map(|(k, idx)| format!("{}_{}", k.name(), idx.iter().collect::<String>()))
        .collect();
    TransvectionRecipe::parse(&text.join(" ")).expect("balanced pairing")
}

fn generator_values(state: &StateVector) -> [Complex64; 7] {
    InvariantId::GENERATORS.map(|id| id.evaluate(state).expect("three-fermion state").value)
}

/// The 24 degree-16 products of the seven generators.
pub fn degree16_products(g: &[Complex64; 7]) -> Vec<Complex64> {
    let (d4, d8, d12) = (&g[0..2], &g[2..5], &g[5..7]);
    let mut out = Vec::with_capacity(24);
    for a in 0..=4 {
        out.push(d4[0].powu(a) * d4[1].powu(4 - a));
    }
    for a in 0..=2 {
        for &p in d8 {
            out.push(d4[0].powu(a) * d4[1].powu(2 - a) * p);
        }
    }
    for i in 0..3 {
        for j in i..3 {
            out.push(d8[i] * d8[j]);
        }
    }
    for &a in d4 {
        for &b in d12 {
            out.push(a * b);
        }
    }
    out
}

/// Relative residual of `target` after projecting onto the column span of
/// `basis` (columns given as vectors over samples).
pub fn span_residual(basis: &[Vec<Complex64>], target: &[Complex64]) -> f64 {
    let n = target.len();
    let norms: Vec<f64> = basis
        .iter()
        .map(|c| c.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1e-300))
        .collect();
    let a = DMatrix::from_fn(n, basis.len(), |i, j| basis[j][i] / norms[j]);
    let tnorm = target.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if tnorm == 0.0 {
        return 0.0;
    }
    let b = DMatrix::from_fn(n, 1, |i, _| target[i] / tnorm);
    let svd = a.clone().svd(true, true);
    let x = svd.solve(&b, RANK_TOL).expect("factors were computed");
    (&a * x - b).norm()
}

/// Searches random balanced degree-16 recipes and tests whether each lies in
/// the span of generator products.
pub fn degree16_probe(per_t: usize, n_states: usize, seed: u64) -> Degree16Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let states: Vec<StateVector> = (0..n_states).map(|_| random_three_fermion_state(&mut rng)).collect();
    let forms: Vec<_> = states
        .iter()
        .map(|s| numeric_forms(s).expect("three-fermion state"))
        .collect();
    let products: Vec<Vec<Complex64>> = states.iter().map(|s| degree16_products(&generator_values(s))).collect();
    let basis: Vec<Vec<Complex64>> = (0..24).map(|k| products.iter().map(|row| row[k]).collect()).collect();
    let mut report = Degree16Report {
        recipes_tried: 0,
        nonzero: 0,
        max_residual: 0.0,
        outside_span: Vec::new(),
    };
    for t in 0..=4 {
        for _ in 0..per_t {
            let recipe = random_degree16_recipe(t, &mut rng);
            report.recipes_tried += 1;
            let values: Vec<Complex64> = forms
                .iter()
                .map(|f| evaluate_recipe_with(&recipe, f).expect("valid recipe").constant_term())
                .collect();
            let scale = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if scale < 1e-14 * typical_degree16_scale(&basis) {
                continue;
            }
            report.nonzero += 1;
            let r = span_residual(&basis, &values);
            report.max_residual = report.max_residual.max(r);
            if r > 1e-6 {
                report.outside_span.push(recipe.to_string());
            }
        }
    }
    report
}

fn typical_degree16_scale(basis: &[Vec<Complex64>]) -> f64 {
    basis
        .iter()
        .flat_map(|c| c.iter().map(|z| z.norm()))
        .fold(0.0, f64::max)
        .max(1e-300)
}

/// Products that must stay linearly independent of each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndependenceSet {
    /// `I_AB, I_BC, I_AC, I1², I2², I1·I2`.
    Degree8,
    /// `I_ABC1, I_ABC2`, the six products `I_k·I_pair` and the four cubes
    /// in `I1, I2`.
    Degree12,
}

impl IndependenceSet {
    pub fn size(self) -> usize {
        match self {
            IndependenceSet::Degree8 => 6,
            IndependenceSet::Degree12 => 12,
        }
    }

    /// Members evaluated from the generator values (in generator order).
    pub fn values(self, g: &[Complex64; 7]) -> Vec<Complex64> {
        let (i1, i2, bc, ac, ab) = (g[0], g[1], g[2], g[3], g[4]);
        match self {
            IndependenceSet::Degree8 => vec![ab, bc, ac, i1 * i1, i2 * i2, i1 * i2],
            IndependenceSet::Degree12 => vec![
                g[5],
                g[6],
                i2 * ab,
                i2 * bc,
                i2 * ac,
                i1 * ab,
                i1 * bc,
                i1 * ac,
                i1 * i1 * i1,
                i2 * i2 * i2,
                i1 * i1 * i2,
                i2 * i2 * i1,
            ],
        }
    }
}

/// Rank of an independence set over `2·size` random states.
pub fn independence_rank(set: IndependenceSet, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let columns: Vec<Vec<Complex64>> = (0..2 * set.size())
        .map(|_| set.values(&generator_values(&random_three_fermion_state(&mut rng))))
        .collect();
    let rows: Vec<Vec<Complex64>> = (0..set.size())
        .map(|k| columns.iter().map(|c| c[k]).collect())
        .collect();
    numerical_rank(&rows)
}
