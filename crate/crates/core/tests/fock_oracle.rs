mod common;

use std::collections::BTreeMap;

use fermislocc::fock::{apply_ladder, BasisLabel, LadderFactor, LadderTerm, ModeOccupation, Sector, Spin};
use proptest::prelude::*;

fn every_label(n_modes: usize) -> Vec<BasisLabel> {
    (0..4usize.pow(n_modes as u32))
        .map(|mut code| {
            let occ = (0..n_modes)
                .map(|_| {
                    let o = ModeOccupation::from_index(code % 4).unwrap();
                    code /= 4;
                    o
                })
                .collect();
            BasisLabel::new(occ)
        })
        .collect()
}

fn sum_of_terms(terms: &[LadderTerm], label: &BasisLabel) -> BTreeMap<String, i32> {
    let mut acc = BTreeMap::new();
    for t in terms {
        if let Some((out, sign)) = apply_ladder(t, label) {
            *acc.entry(out.to_string()).or_insert(0) += i32::from(sign);
        }
    }
    acc.retain(|_, v| *v != 0);
    acc
}

#[test]
fn bilinears_match_transposition_count() {
    for (n, m) in [(2, 2), (3, 3), (4, 4), (3, 2)] {
        let sector = Sector::new(n, m).unwrap();
        for term in common::all_bilinears(n) {
            for label in sector.basis() {
                assert_eq!(
                    apply_ladder(&term, label),
                    common::oracle_ladder(&term, label),
                    "{term:?} on {label}"
                );
            }
        }
    }
}

#[test]
fn canonical_anticommutators() {
    let n = 3;
    let slots: Vec<(usize, Spin)> = (0..n).flat_map(|m| [(m, Spin::Up), (m, Spin::Down)]).collect();
    for label in every_label(n) {
        for &(i, s) in &slots {
            for &(j, t) in &slots {
                let (a, ad) = (LadderFactor::annihilate(i, s), LadderFactor::create(j, t));
                let mixed = sum_of_terms(&[LadderTerm::new(vec![a, ad]), LadderTerm::new(vec![ad, a])], &label);
                let expected: BTreeMap<String, i32> = if (i, s) == (j, t) {
                    [(label.to_string(), 1)].into()
                } else {
                    BTreeMap::new()
                };
                assert_eq!(mixed, expected, "{{c({i},{s:?}), c†({j},{t:?})}} on {label}");

                let (bd, cd) = (LadderFactor::create(i, s), LadderFactor::create(j, t));
                let creators = sum_of_terms(&[LadderTerm::new(vec![bd, cd]), LadderTerm::new(vec![cd, bd])], &label);
                assert!(creators.is_empty(), "creators do not anticommute on {label}");
            }
        }
    }
}

#[test]
fn number_operator_is_diagonal() {
    for label in every_label(3) {
        for m in 0..3 {
            for s in [Spin::Up, Spin::Down] {
                let got = apply_ladder(&LadderTerm::hop(m, m, s), &label);
                if label.mode(m).contains(s) {
                    assert_eq!(got, Some((label.clone(), 1)));
                } else {
                    assert_eq!(got, None);
                }
            }
        }
    }
}

fn factor() -> impl Strategy<Value = LadderFactor> {
    (0..3usize, any::<bool>(), any::<bool>()).prop_map(|(m, up, create)| {
        let spin = if up { Spin::Up } else { Spin::Down };
        if create {
            LadderFactor::create(m, spin)
        } else {
            LadderFactor::annihilate(m, spin)
        }
    })
}

proptest! {
    #[test]
    fn longer_words_match_oracle(factors in prop::collection::vec(factor(), 1..6), code in 0usize..64) {
        let label = every_label(3).swap_remove(code);
        let term = LadderTerm::new(factors);
        prop_assert_eq!(apply_ladder(&term, &label), common::oracle_ladder(&term, &label));
    }
}
