use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::crossval::{localize_a, random_three_fermion_state};
use super::*;
use crate::fock::{BasisLabel, ModeOccupation};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn amp(label: &str) -> SparsePolynomial {
    let sector = forms::three_fermion_sector();
    let l = BasisLabel::parse(label).unwrap();
    SparsePolynomial::var(Symbol::Amplitude(sector.position(&l).unwrap() as u16))
}

#[test]
fn form_sizes() {
    let f = build_forms();
    assert_eq!(f.get(FormKind::M).n_terms(), 8);
    for k in &FormKind::ALL[1..] {
        assert_eq!(f.get(*k).n_terms(), 2, "{}", k.name());
    }
    let mut ids = std::collections::BTreeSet::new();
    for k in FormKind::ALL {
        for (m, _) in f.get(k).terms() {
            for (s, _) in m.factors() {
                if let Symbol::Amplitude(i) = s {
                    ids.insert(i);
                }
            }
        }
    }
    assert_eq!(ids.len(), 20);
}

#[test]
fn transvection_of_two_linear_forms() {
    let f = build_forms();
    let t = transvect(f.get(FormKind::M21), f.get(FormKind::M31), VarFamily::X);
    let expected = &amp("uD0") * &amp("d0D") - &amp("dD0") * &amp("u0D");
    assert_eq!(t, expected);
}

#[test]
fn transvection_is_antisymmetric() {
    let f = build_forms();
    let ab = transvect(f.get(FormKind::M21), f.get(FormKind::M), VarFamily::X);
    let ba = transvect(f.get(FormKind::M), f.get(FormKind::M21), VarFamily::X);
    assert_eq!(ab, -ba);
    let self_t = transvect(f.get(FormKind::M12), f.get(FormKind::M12), VarFamily::Y);
    assert!(self_t.is_zero());
}

#[test]
fn transvection_with_trilinear_form() {
    let f = build_forms();
    let t = transvect(f.get(FormKind::M), f.get(FormKind::M31), VarFamily::X);
    assert_eq!(t.n_terms(), 8);
    assert!(t.has_aux());
}

#[test]
fn monomial_exponents() {
    let p = &amp("uD0") * &amp("uD0");
    let (m, coeff) = p.terms().next().unwrap();
    assert_eq!(coeff, c(1.0));
    assert_eq!(m.degree(), 2);
    assert_eq!(
        p.derivative(Symbol::Amplitude(0)).is_zero(),
        m.exponent(Symbol::Amplitude(0)) == 0
    );
}

#[test]
fn symbol_ids_roundtrip() {
    for id in 0..(AMPLITUDE_COUNT + 6 * 256) {
        assert_eq!(Symbol::from_id(id).id(), id);
    }
}

#[test]
fn recipe_parse_rejects_bad_indices() {
    assert!(TransvectionRecipe::parse("M_ijk m31_i m12_j").is_err());
    assert!(TransvectionRecipe::parse("m21_i m12_i").is_err());
    assert!(TransvectionRecipe::parse("M_ij").is_err());
    assert!(TransvectionRecipe::parse("").is_err());
    let r = TransvectionRecipe::parse("1/2 m21_r m31_r").unwrap();
    assert_eq!(r.scale, c(0.5));
}

#[test]
fn i1_recipe_shape() {
    let p = evaluate_recipe(&NamedRecipe::I1.recipe()).unwrap();
    assert_eq!(p.homogeneous_degree(), Some(4));
    assert_eq!(p.n_terms(), 8);
    assert!(is_index_balanced(&p));
    assert!(is_mode_balanced(&p));
}

#[test]
fn ial_recipe_shape() {
    let p = evaluate_recipe(&NamedRecipe::IAL.recipe()).unwrap();
    assert_eq!(p.n_terms(), 2);
    assert_eq!(p.homogeneous_degree(), Some(2));
}

#[test]
fn numeric_and_symbolic_evaluation_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let s = random_three_fermion_state(&mut rng);
    for r in [NamedRecipe::I1, NamedRecipe::IAB, NamedRecipe::IA1] {
        let sym = evaluate_at(&evaluate_recipe(&r.recipe()).unwrap(), &s).unwrap();
        let num = evaluate_recipe_at(&r.recipe(), &s).unwrap();
        assert!((sym - num).norm() <= 1e-12 * sym.norm().max(1e-30), "{}", r.name());
    }
}

#[test]
fn recipes_track_hand_written_invariants() {
    for r in NamedRecipe::ALL {
        let k = proportionality_with(
            |s| evaluate_recipe_at(&r.recipe(), s),
            |s| reference_value(r, s),
            12,
            17,
        )
        .unwrap_or_else(|e| panic!("{}: {e}", r.name()));
        assert!(k.norm() > 1e-6, "{}: {k}", r.name());
    }
}

#[test]
fn localize_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let s = localize_a(&random_three_fermion_state(&mut rng));
    for (l, a) in s.iter() {
        if matches!(l.mode(0), ModeOccupation::Empty | ModeOccupation::Double) {
            assert_eq!(a, c(0.0));
        }
    }
}

#[test]
fn rank_detects_dependence() {
    let x = vec![c(1.0), c(2.0), c(3.0)];
    let y = vec![c(2.0), c(4.0), c(6.0)];
    let z = vec![c(0.0), c(1.0), c(0.0)];
    assert_eq!(numerical_rank(&[x.clone(), y]), 1);
    assert_eq!(numerical_rank(&[x, z]), 2);
}

#[test]
fn independence_sets_have_full_rank() {
    assert_eq!(independence_rank(IndependenceSet::Degree8, 1), 6);
    assert_eq!(independence_rank(IndependenceSet::Degree12, 1), 12);
}

#[test]
fn rank_of_generator_polynomials() {
    let i1 = evaluate_recipe(&NamedRecipe::I1.recipe()).unwrap();
    let i2 = evaluate_recipe(&NamedRecipe::I2.recipe()).unwrap();
    assert_eq!(rank_of_set(&[i1.clone(), i2], 4, 2).unwrap(), 2);
    assert_eq!(rank_of_set(&[i1.clone(), i1.scale(c(3.0))], 4, 2).unwrap(), 1);
}
