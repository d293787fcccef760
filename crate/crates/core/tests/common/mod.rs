//! Helpers shared by the integration tests.

#![allow(dead_code)]

use fermislocc::fock::{BasisLabel, LadderFactor, LadderKind, LadderTerm, ModeOccupation, Spin};

/// Canonical slot index: mode-major, up before down.
fn slot(mode: usize, spin: Spin) -> usize {
    2 * mode + usize::from(spin == Spin::Down)
}

/// The occupied slots of a label, i.e. the creation word in canonical order.
fn word(label: &BasisLabel) -> Vec<usize> {
    let mut w = Vec::new();
    for (m, occ) in label.occupations().iter().enumerate() {
        for spin in [Spin::Up, Spin::Down] {
            if occ.contains(spin) {
                w.push(slot(m, spin));
            }
        }
    }
    w
}

fn label_of(word: &[usize], n_modes: usize) -> BasisLabel {
    BasisLabel::new(
        (0..n_modes)
            .map(|m| {
                let up = word.contains(&(2 * m));
                let down = word.contains(&(2 * m + 1));
                match (up, down) {
                    (true, true) => ModeOccupation::Double,
                    (true, false) => ModeOccupation::Up,
                    (false, true) => ModeOccupation::Down,
                    (false, false) => ModeOccupation::Empty,
                }
            })
            .collect(),
    )
}

/// Brute-force ladder action. An annihilator is anticommuted to the front of
/// the word and removed. A creator is prepended and the word bubble-sorted
/// back to canonical order, counting transpositions.
pub fn oracle_ladder(term: &LadderTerm, label: &BasisLabel) -> Option<(BasisLabel, i8)> {
    let n = label.n_modes();
    let mut w = word(label);
    let mut swaps = 0usize;
    for f in term.factors.iter().rev() {
        if f.mode >= n {
            return None;
        }
        let s = slot(f.mode, f.spin);
        match f.kind {
            LadderKind::Annihilate => {
                let pos = w.iter().position(|&x| x == s)?;
                swaps += pos;
                w.remove(pos);
            }
            LadderKind::Create => {
                if w.contains(&s) {
                    return None;
                }
                w.insert(0, s);
                for i in 0..w.len() {
                    for j in 0..w.len() - 1 - i {
                        if w[j] > w[j + 1] {
                            w.swap(j, j + 1);
                            swaps += 1;
                        }
                    }
                }
            }
        }
    }
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    Some((label_of(&w, n), sign))
}

/// Every `c†_{i,s} c_{j,s'}` on `n_modes` modes, spin flips included.
pub fn all_bilinears(n_modes: usize) -> Vec<LadderTerm> {
    let mut out = Vec::new();
    for i in 0..n_modes {
        for j in 0..n_modes {
            for s in [Spin::Up, Spin::Down] {
                for t in [Spin::Up, Spin::Down] {
                    out.push(LadderTerm::new(vec![
                        LadderFactor::create(i, s),
                        LadderFactor::annihilate(j, t),
                    ]));
                }
            }
        }
    }
    out
}
