//! Property suites shared by the `check` subcommand and the test targets.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fock::{state_from_amplitudes, BasisLabel, ModeOccupation, Sector, StateVector};
use crate::invariants::{Attractive, InvariantId, Localized};
use crate::maxent::{
    cyclic_max_state, example_state, is_maximally_entangled, two_fermion_max, CyclicSpec, ExampleKind,
};
use crate::omega::{
    crossval::{localize_a, localize_a_paired_bc, random_three_fermion_state},
    degree16_probe, evaluate_recipe, evaluate_recipe_at, independence_rank, is_index_balanced, is_mode_balanced,
    proportionality_with, reference_value, IndependenceSet, NamedRecipe,
};
use crate::slocc::{apply, random_local, scaling_element, GroupElement, Subgroup, DEFAULT_SCALE};

/// Relative tolerance for invariance under the group.
pub const INVARIANCE_TOL: f64 = 1e-8;
/// Absolute tolerance for invariants that must vanish.
pub const VANISHING_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Slocc,
    Omega,
    Maxent,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "slocc" => Ok(Suite::Slocc),
            "omega" => Ok(Suite::Omega),
            "maxent" => Ok(Suite::Maxent),
            "all" => Ok(Suite::All),
            _ => Err(Error::domain(format!("unknown suite {s:?}"))),
        }
    }
}

pub fn run_suite(suite: Suite, samples: usize, seed: u64) -> Vec<CheckOutcome> {
    match suite {
        Suite::Slocc => slocc_suite(samples, seed),
        Suite::Omega => omega_suite(samples, seed),
        Suite::Maxent => maxent_suite(),
        Suite::All => {
            let mut out = slocc_suite(samples, seed);
            out.extend(omega_suite(samples, seed));
            out.extend(maxent_suite());
            out
        }
    }
}

fn pair_only(occ: &[ModeOccupation]) -> bool {
    occ.iter()
        .all(|o| matches!(o, ModeOccupation::Empty | ModeOccupation::Double))
}

/// Random state in `sector` restricted to labels accepted by `keep`.
pub fn random_supported_state<R: Rng>(
    sector: &Sector,
    rng: &mut R,
    keep: impl Fn(&BasisLabel) -> bool,
) -> Result<StateVector> {
    let entries: Vec<(BasisLabel, Complex64)> = sector
        .basis()
        .iter()
        .filter(|l| keep(l))
        .map(|l| {
            let a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            (l.clone(), a)
        })
        .collect();
    state_from_amplitudes(sector, entries, true)
}

/// A random state satisfying the sector and support preconditions of `id`.
pub fn random_state_for<R: Rng>(id: InvariantId, rng: &mut R) -> Result<StateVector> {
    match id {
        InvariantId::I0 => random_supported_state(&Sector::new(2, 2)?, rng, |_| true),
        InvariantId::Deg4(_) | InvariantId::Pair(_) | InvariantId::Abc(_) => Ok(random_three_fermion_state(rng)),
        InvariantId::Repulsive(_) => random_supported_state(&Sector::new(3, 2)?, rng, |l| {
            !l.occupations().contains(&ModeOccupation::Double)
        }),
        InvariantId::Attractive(Attractive::PairMonomial) => {
            random_supported_state(&Sector::new(2, 2)?, rng, |l| pair_only(l.occupations()))
        }
        InvariantId::Attractive(_) => random_supported_state(&Sector::new(4, 4)?, rng, |l| pair_only(l.occupations())),
        InvariantId::Localized(Localized::AL) => {
            Ok(localize_a_paired_bc(&random_three_fermion_state(rng)).normalized()?)
        }
        InvariantId::Localized(_) => Ok(localize_a(&random_three_fermion_state(rng)).normalized()?),
    }
}

/// Per-mode subgroups under which `id` is invariant.
pub fn subgroups_for(id: InvariantId) -> Vec<Subgroup> {
    match id {
        InvariantId::I0 => vec![Subgroup::Full; 2],
        InvariantId::Deg4(_) | InvariantId::Pair(_) | InvariantId::Abc(_) => vec![Subgroup::Full; 3],
        InvariantId::Repulsive(_) => vec![Subgroup::Hardcore; 3],
        InvariantId::Attractive(Attractive::PairMonomial) => vec![Subgroup::PairDiagonal; 2],
        InvariantId::Attractive(_) => vec![Subgroup::PairDiagonal; 4],
        // the pinned fermion sees only SL(2) on its spin
        InvariantId::Localized(Localized::AL) => {
            vec![Subgroup::Spin, Subgroup::PairDiagonal, Subgroup::PairDiagonal]
        }
        InvariantId::Localized(_) => vec![Subgroup::Spin, Subgroup::Full, Subgroup::Full],
    }
}

pub fn random_group_for<R: Rng>(id: InvariantId, scale: f64, rng: &mut R) -> GroupElement {
    GroupElement::new(
        subgroups_for(id)
            .into_iter()
            .map(|g| random_local(scale, rng, g))
            .collect(),
    )
}

fn relative_deviation(before: Complex64, after: Complex64) -> f64 {
    (after - before).norm() / before.norm().max(1e-300)
}

/// Largest relative change of `id` over `samples` random (state, element)
/// pairs.
pub fn invariance_deviation(id: InvariantId, samples: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let psi = random_state_for(id, &mut rng)?;
        let g = random_group_for(id, DEFAULT_SCALE, &mut rng);
        let before = id.evaluate(&psi)?.value;
        let after = id.evaluate(&apply(&g, &psi)?)?.value;
        worst = worst.max(relative_deviation(before, after));
    }
    Ok(worst)
}

pub fn invariance_checks(samples: usize, seed: u64) -> Vec<CheckOutcome> {
    InvariantId::ALL
        .iter()
        .enumerate()
        .map(|(k, &id)| {
            let name = format!("invariance {id}");
            match invariance_deviation(id, samples, seed.wrapping_add(k as u64)) {
                Ok(d) => CheckOutcome::new(
                    name,
                    d < INVARIANCE_TOL,
                    format!("max relative deviation {d:.2e} over {samples} samples"),
                ),
                Err(e) => CheckOutcome::new(name, false, e.to_string()),
            }
        })
        .collect()
}

fn random_spinor<R: Rng>(rng: &mut R) -> [Complex64; 2] {
    std::array::from_fn(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn random_part<R: Rng>(
    n_modes: usize,
    n_particles: usize,
    rng: &mut R,
    keep: impl Fn(&BasisLabel) -> bool,
) -> Vec<(Vec<ModeOccupation>, Complex64)> {
    if n_modes == 0 {
        return vec![(Vec::new(), Complex64::new(1.0, 0.0))];
    }
    let Ok(sector) = Sector::new(n_modes, n_particles) else {
        return Vec::new();
    };
    sector
        .basis()
        .iter()
        .filter(|l| keep(l))
        .map(|l| {
            let a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            (l.occupations().to_vec(), a)
        })
        .collect()
}

/// `r₁|s⟩_k|θ⟩ + r₂|0⟩_k|φ⟩ + r₃|◇⟩_k|φ'⟩` with a random spinor `s` and
/// random rest states on the other modes; `with_double` false sets `r₃ = 0`
/// and keeps every part free of ◇.
pub fn bell_local_state<R: Rng>(
    n_modes: usize,
    n_particles: usize,
    k: usize,
    with_double: bool,
    rng: &mut R,
) -> Result<StateVector> {
    let sector = Sector::new(n_modes, n_particles)?;
    let keep = |l: &BasisLabel| with_double || !l.occupations().contains(&ModeOccupation::Double);
    let spinor = random_spinor(rng);
    let mut entries = Vec::new();
    let mut push = |local: ModeOccupation, weight: Complex64, rest: Vec<(Vec<ModeOccupation>, Complex64)>| {
        for (mut occ, a) in rest {
            occ.insert(k, local);
            entries.push((BasisLabel::new(occ), weight * a));
        }
    };
    let rest = n_modes - 1;
    if n_particles >= 1 {
        let theta = random_part(rest, n_particles - 1, rng, keep);
        push(ModeOccupation::Up, spinor[0], theta.clone());
        push(ModeOccupation::Down, spinor[1], theta);
    }
    let phi = random_part(rest, n_particles, rng, keep);
    push(ModeOccupation::Empty, Complex64::new(rng.gen_range(0.2..1.0), 0.0), phi);
    if with_double && n_particles >= 2 {
        let phi2 = random_part(rest, n_particles - 2, rng, keep);
        push(
            ModeOccupation::Double,
            Complex64::new(rng.gen_range(0.2..1.0), 0.0),
            phi2,
        );
    }
    state_from_amplitudes(&sector, entries, true)
}

/// `|s⟩_A|φ⟩_{BC}` with one fermion pinned to A. `paired` keeps B and C in
/// `{0, ◇}`.
pub fn localized_product_state<R: Rng>(paired: bool, rng: &mut R) -> Result<StateVector> {
    let sector = Sector::new(3, 3)?;
    let spinor = random_spinor(rng);
    let phi = random_part(2, 2, rng, |l| !paired || pair_only(l.occupations()));
    let mut entries = Vec::new();
    for (s, w) in [(ModeOccupation::Up, spinor[0]), (ModeOccupation::Down, spinor[1])] {
        for (occ, a) in &phi {
            let mut full = vec![s];
            full.extend_from_slice(occ);
            entries.push((BasisLabel::new(full), w * a));
        }
    }
    state_from_amplitudes(&sector, entries, true)
}

/// Largest magnitude of the given invariants over the states.
fn max_magnitude(ids: &[InvariantId], states: &[StateVector]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for s in states {
        for id in ids {
            worst = worst.max(id.evaluate(s)?.value.norm());
        }
    }
    Ok(worst)
}

pub fn bell_local_checks(samples: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut case =
        |name: &str, ids: Vec<InvariantId>, build: &mut dyn FnMut(&mut ChaCha8Rng) -> Result<StateVector>| {
            let result = (0..samples)
                .map(|_| build(&mut rng))
                .collect::<Result<Vec<_>>>()
                .and_then(|states| max_magnitude(&ids, &states));
            out.push(match result {
                Ok(m) => CheckOutcome::new(
                    name,
                    m < VANISHING_TOL,
                    format!("max |I| {m:.2e} over {samples} states"),
                ),
                Err(e) => CheckOutcome::new(name, false, e.to_string()),
            });
        };
    for k in 0..3 {
        case(
            &format!("bell-local generators, mode {k}"),
            InvariantId::GENERATORS.to_vec(),
            &mut |r| bell_local_state(3, 3, k, true, r),
        );
    }
    for k in 0..2 {
        case(&format!("bell-local I0, mode {k}"), vec![InvariantId::I0], &mut |r| {
            bell_local_state(2, 2, k, true, r)
        });
    }
    let rep = crate::invariants::Family::Repulsive.members();
    for k in 0..3 {
        case(&format!("bell-local hardcore, mode {k}"), rep.clone(), &mut |r| {
            bell_local_state(3, 2, k, false, r)
        });
    }
    case(
        "localized product, IA1 IA2",
        vec![
            InvariantId::Localized(Localized::A1),
            InvariantId::Localized(Localized::A2),
        ],
        &mut |r| localized_product_state(false, r),
    );
    case(
        "localized product, IAL",
        vec![InvariantId::Localized(Localized::AL)],
        &mut |r| localized_product_state(true, r),
    );
    out
}

pub fn scaling_checks(seed: u64) -> Vec<CheckOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let scaled = (|| -> Result<f64> {
        let psi = random_supported_state(&Sector::new(2, 1)?, &mut rng, |_| true)?;
        let img = apply(&scaling_element(2, 2.0, 0.0)?, &psi)?;
        Ok(psi
            .amplitudes()
            .iter()
            .zip(img.amplitudes())
            .map(|(a, b)| (b - a * 2.0).norm())
            .fold(0.0, f64::max))
    })();
    out.push(match scaled {
        Ok(d) => CheckOutcome::new(
            "scaling on 2 modes, 1 fermion",
            d == 0.0,
            format!("max |g psi - 2 psi| = {d:.2e}"),
        ),
        Err(e) => CheckOutcome::new("scaling on 2 modes, 1 fermion", false, e.to_string()),
    });
    for n in [2usize, 3, 4] {
        let name = format!("scaling on {n} modes, {n} fermions");
        let dev = (|| -> Result<f64> {
            let psi = random_supported_state(&Sector::new(n, n)?, &mut rng, |_| true)?;
            let img = apply(&scaling_element(n, 2.0, 0.7)?, &psi)?;
            Ok(psi
                .amplitudes()
                .iter()
                .zip(img.amplitudes())
                .map(|(a, b)| (b - a).norm())
                .fold(0.0, f64::max))
        })();
        out.push(match dev {
            Ok(d) => CheckOutcome::new(name, d < 1e-12, format!("max deviation {d:.2e}")),
            Err(e) => CheckOutcome::new(name, false, e.to_string()),
        });
    }
    out
}

pub fn slocc_suite(samples: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut out = invariance_checks(samples, seed);
    out.extend(bell_local_checks(samples.clamp(1, 50), seed.wrapping_add(1000)));
    out.extend(scaling_checks(seed.wrapping_add(2000)));
    out
}

/// Reference support and subgroup of a recipe, via its hand-written twin.
fn twin(recipe: NamedRecipe) -> InvariantId {
    match recipe {
        NamedRecipe::IA1 => InvariantId::Localized(Localized::A1),
        NamedRecipe::IA2a | NamedRecipe::IA2b => InvariantId::Localized(Localized::A2),
        NamedRecipe::IAL => InvariantId::Localized(Localized::AL),
        r => InvariantId::GENERATORS[NamedRecipe::GENERATORS.iter().position(|&g| g == r).unwrap()],
    }
}

fn recipe_invariance(recipe: NamedRecipe, samples: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = recipe.recipe();
    let id = twin(recipe);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let psi = random_state_for(id, &mut rng)?;
        let g = random_group_for(id, DEFAULT_SCALE, &mut rng);
        let before = evaluate_recipe_at(&r, &psi)?;
        let after = evaluate_recipe_at(&r, &apply(&g, &psi)?)?;
        worst = worst.max(relative_deviation(before, after));
    }
    Ok(worst)
}

pub fn omega_suite(samples: usize, seed: u64) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for (k, r) in NamedRecipe::ALL.into_iter().enumerate() {
        let name = format!("omega {} proportional", r.name());
        let s = seed.wrapping_add(k as u64);
        out.push(
            match proportionality_with(|x| evaluate_recipe_at(&r.recipe(), x), |x| reference_value(r, x), 20, s) {
                Ok(c) => CheckOutcome::new(name, c.norm() > 1e-9, format!("constant {:.6} {:+.1e}i", c.re, c.im)),
                Err(e) => CheckOutcome::new(name, false, e.to_string()),
            },
        );
        let name = format!("omega {} invariant", r.name());
        out.push(match recipe_invariance(r, samples.clamp(1, 50), s) {
            Ok(d) => CheckOutcome::new(name, d < INVARIANCE_TOL, format!("max relative deviation {d:.2e}")),
            Err(e) => CheckOutcome::new(name, false, e.to_string()),
        });
    }
    for r in NamedRecipe::GENERATORS {
        let name = format!("omega {} balance", r.name());
        out.push(match evaluate_recipe(&r.recipe()) {
            Ok(p) => {
                let deg = p.homogeneous_degree();
                let ok = is_index_balanced(&p) && is_mode_balanced(&p) && deg.is_some_and(|d| d % 4 == 0);
                CheckOutcome::new(name, ok, format!("{} monomials, degree {deg:?}", p.n_terms()))
            }
            Err(e) => CheckOutcome::new(name, false, e.to_string()),
        });
    }
    for set in [IndependenceSet::Degree8, IndependenceSet::Degree12] {
        let rank = independence_rank(set, seed);
        out.push(CheckOutcome::new(
            format!("rank of the {set:?} set"),
            rank == set.size(),
            format!("rank {rank} of {}", set.size()),
        ));
    }
    let report = degree16_probe(6, 60, seed);
    out.push(CheckOutcome::new(
        "degree-16 probe",
        report.outside_span.is_empty(),
        format!(
            "{} recipes, {} nonzero, max residual {:.1e}",
            report.recipes_tried, report.nonzero, report.max_residual
        ),
    ));
    out
}

pub fn maxent_suite() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let s = two_fermion_max();
    let i0 = InvariantId::I0.evaluate(&s).map(|v| v.value.norm().sqrt());
    out.push(CheckOutcome::new(
        "two-fermion maximum",
        is_maximally_entangled(&s, 1e-12) && i0.as_ref().is_ok_and(|v| (v - 0.25).abs() < 1e-12),
        format!("|I0|^(1/2) = {i0:?}"),
    ));
    for kind in ExampleKind::ALL {
        let s = example_state(kind);
        let mut worst_other: f64 = 0.0;
        let mut designated = 0.0;
        for id in InvariantId::GENERATORS {
            let v = id.evaluate(&s).map(|x| x.value.norm()).unwrap_or(f64::NAN);
            if id == kind.designated() {
                designated = v;
            } else {
                worst_other = worst_other.max(v);
            }
        }
        let ok = is_maximally_entangled(&s, 1e-12) && designated > 1e-6 && worst_other < VANISHING_TOL;
        out.push(CheckOutcome::new(
            format!("example {kind}"),
            ok,
            format!(
                "|{}| = {designated:.3e}, others <= {worst_other:.1e}",
                kind.designated()
            ),
        ));
    }
    for r in [1, 2] {
        let name = format!("cyclic construction p=1 r={r}");
        out.push(match cyclic_max_state(CyclicSpec { p: 1, r }) {
            Ok(s) => CheckOutcome::new(
                name,
                is_maximally_entangled(&s, 1e-12),
                format!("{} terms on {} modes", s.support().count(), s.sector().n_modes()),
            ),
            Err(e) => CheckOutcome::new(name, false, e.to_string()),
        });
    }
    out
}
