use std::collections::{HashMap, HashSet};

use fermislocc::error::Error;
use fermislocc::fock::{Sector, StateVector};
use fermislocc::invariants::{reduced_density_matrix, InvariantId};
use fermislocc::maxent::{
    cyclic_max_state, example_state, is_maximally_entangled, odd_attractive_state, two_fermion_max, CyclicSpec,
    ExampleKind,
};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Plain partial trace over all modes but `k`. Reordering mode `k` to the
/// front costs the same sign on both sides of every nonzero element, so no
/// fermionic bookkeeping is needed.
fn oracle_rdm(psi: &StateVector, k: usize) -> [[Complex64; 4]; 4] {
    let mut rest: HashMap<String, Vec<(usize, Complex64)>> = HashMap::new();
    for (label, a) in psi.iter() {
        let mut key = label.to_string();
        let local = key.remove(k);
        let idx = "ud0D".find(local).unwrap();
        rest.entry(key).or_default().push((idx, a));
    }
    let mut rho = [[Complex64::new(0.0, 0.0); 4]; 4];
    for terms in rest.values() {
        for &(i, a) in terms {
            for &(j, b) in terms {
                rho[i][j] += a * b.conj();
            }
        }
    }
    rho
}

#[test]
#[allow(clippy::needless_range_loop)]
fn rdm_matches_the_partial_trace_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut states: Vec<StateVector> = ExampleKind::ALL.into_iter().map(example_state).collect();
    states.push(two_fermion_max());
    states.push(odd_attractive_state());
    for (n, m) in [(2, 2), (3, 3), (3, 2), (4, 4)] {
        states.push(StateVector::random(&Sector::new(n, m).unwrap(), &mut rng));
    }
    for psi in &states {
        let psi = psi.normalized().unwrap();
        for k in 0..psi.sector().n_modes() {
            let got = reduced_density_matrix(&psi, k).unwrap();
            let want = oracle_rdm(&psi, k);
            for i in 0..4 {
                for j in 0..4 {
                    assert!((got.0[(i, j)] - want[i][j]).norm() < 1e-12, "mode {k} entry ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn cyclic_states_have_distinct_equal_weight_terms() {
    for (r, modes) in [(1u32, 4usize), (2, 8)] {
        let s = cyclic_max_state(CyclicSpec::new(1, r).unwrap()).unwrap();
        assert_eq!((s.sector().n_modes(), s.sector().n_particles()), (modes, modes));
        let support: HashSet<String> = s.support().map(|l| l.to_string()).collect();
        assert_eq!(support.len(), 4);
        for (_, a) in s.iter().filter(|(_, a)| a.norm() > 0.0) {
            assert_eq!(a, Complex64::new(0.5, 0.0));
        }
        assert!(is_maximally_entangled(&s, 1e-12));
    }
}

#[test]
fn cyclic_guard_and_domain() {
    assert!(matches!(CyclicSpec::new(2, 1), Err(Error::Domain(_))));
    assert!(matches!(CyclicSpec::new(1, 0), Err(Error::Domain(_))));
    let big = CyclicSpec::new(1, 3).unwrap();
    assert_eq!(big.sector_dim(), 2_704_156);
    assert!(matches!(cyclic_max_state(big), Err(Error::Resource(_))));
    assert!(matches!(
        cyclic_max_state(CyclicSpec::new(3, 1).unwrap()),
        Err(Error::Resource(_))
    ));
}

#[test]
fn w_block_of_the_abc1_example() {
    let s = example_state(ExampleKind::Iabc1Only);
    let w = 12f64.sqrt().recip();
    for label in ["dud", "udd", "ddu"] {
        let a = s.amplitude(&fermislocc::fock::BasisLabel::parse(label).unwrap());
        assert!((a.norm() - w).abs() < 1e-15, "{label}: {a}");
    }
}

#[test]
fn three_mode_invariants_reject_two_particle_states() {
    let psi = StateVector::random(&Sector::new(3, 2).unwrap(), &mut ChaCha8Rng::seed_from_u64(2));
    for id in InvariantId::GENERATORS {
        assert!(matches!(id.evaluate(&psi), Err(Error::Domain(_))), "{}", id.name());
    }
}
