//! Transvection recipes in the shortform `M_ijk m31_i m12_j m23_k`: every
//! index names one Ω contraction between the two factors that carry it.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use super::forms::{build_forms, numeric_forms, FormCollection, FormKind};
use super::poly::{SparsePolynomial, VarFamily};
use crate::error::{Error, Result};
use crate::fock::StateVector;

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    pub kind: FormKind,
    /// One index letter per variable family of `kind`, in family order.
    pub indices: Vec<char>,
}

/// One Ω contraction: factor `first` supplies the primed variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub index: char,
    pub family: VarFamily,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransvectionRecipe {
    pub scale: Complex64,
    pub factors: Vec<Factor>,
}

impl TransvectionRecipe {
    /// Parses `[scale] factor factor ...`, where a factor is `M_ijk` or
    /// `mab_i`. An optional leading token `a/b` or a decimal sets the scale.
    pub fn parse(text: &str) -> Result<Self> {
        let mut scale = Complex64::new(1.0, 0.0);
        let mut factors = Vec::new();
        for (pos, tok) in text.split_whitespace().enumerate() {
            if pos == 0 && !tok.contains('_') {
                scale = Complex64::new(parse_scale(tok)?, 0.0);
                continue;
            }
            let (name, idx) = tok
                .split_once('_')
                .ok_or_else(|| Error::domain(format!("factor {tok:?} lacks an index list")))?;
            let kind = FormKind::from_name(name).ok_or_else(|| Error::domain(format!("unknown form {name:?}")))?;
            let indices: Vec<char> = idx.chars().collect();
            if indices.len() != kind.families().len() {
                return Err(Error::domain(format!(
                    "{name} takes {} indices, got {idx:?}",
                    kind.families().len()
                )));
            }
            factors.push(Factor { kind, indices });
        }
        if factors.is_empty() {
            return Err(Error::domain("empty recipe"));
        }
        let recipe = TransvectionRecipe { scale, factors };
        recipe.contractions()?;
        Ok(recipe)
    }

    /// Checks that every index appears exactly twice, on two different
    /// factors, in the same variable family.
    pub fn contractions(&self) -> Result<Vec<Contraction>> {
        let mut seen: BTreeMap<char, Vec<(usize, VarFamily)>> = BTreeMap::new();
        for (f, factor) in self.factors.iter().enumerate() {
            for (&c, &fam) in factor.indices.iter().zip(factor.kind.families()) {
                seen.entry(c).or_default().push((f, fam));
            }
        }
        let mut out = Vec::new();
        for (c, uses) in seen {
            match uses.as_slice() {
                [(f1, w1), (f2, w2)] if w1 == w2 && f1 != f2 => out.push(Contraction {
                    index: c,
                    family: *w1,
                    first: *f1,
                    second: *f2,
                }),
                [_, _] => return Err(Error::domain(format!("index {c} joins different variable families"))),
                _ => {
                    return Err(Error::domain(format!(
                        "index {c} appears {} times; each index must appear exactly twice",
                        uses.len()
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }
}

fn parse_scale(tok: &str) -> Result<f64> {
    let bad = || Error::domain(format!("bad recipe scale {tok:?}"));
    match tok.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.parse().map_err(|_| bad())?;
            let b: f64 = b.parse().map_err(|_| bad())?;
            Ok(a / b)
        }
        None => tok.parse().map_err(|_| bad()),
    }
}

impl fmt::Display for TransvectionRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale != Complex64::new(1.0, 0.0) {
            write!(f, "{} ", self.scale.re)?;
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| format!("{}_{}", x.kind.name(), x.indices.iter().collect::<String>()))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Transvection of two forms on one variable family: relabel to primed
/// copies, multiply, apply `Ω_w`, substitute back.
pub fn transvect(a: &SparsePolynomial, b: &SparsePolynomial, family: VarFamily) -> SparsePolynomial {
    const P1: u8 = 254;
    const P2: u8 = 255;
    let a1 = a.recopy(Some(family), 0, P1);
    let b2 = b.recopy(Some(family), 0, P2);
    (&a1 * &b2)
        .omega(family, P1, P2)
        .recopy(Some(family), P1, 0)
        .recopy(Some(family), P2, 0)
}

/// Fully contracts a recipe over symbolic forms.
pub fn evaluate_recipe(recipe: &TransvectionRecipe) -> Result<SparsePolynomial> {
    evaluate_recipe_with(recipe, &build_forms())
}

/// Contracts a recipe over the given forms. Factor `f` lives on copy `f+1`;
/// factors are multiplied in recipe order and each contraction is applied
/// as soon as both of its factors are present.
pub fn evaluate_recipe_with(recipe: &TransvectionRecipe, forms: &FormCollection) -> Result<SparsePolynomial> {
    let contractions = recipe.contractions()?;
    if recipe.factors.len() > 250 {
        return Err(Error::domain("recipe too long"));
    }
    let mut acc = SparsePolynomial::constant(recipe.scale);
    for (f, factor) in recipe.factors.iter().enumerate() {
        let form = forms.get(factor.kind).recopy(None, 0, (f + 1) as u8);
        acc = &acc * &form;
        for c in contractions.iter().filter(|c| c.second == f) {
            acc = acc.omega(c.family, (c.first + 1) as u8, (c.second + 1) as u8);
        }
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Numeric value of a recipe at a three-fermion state.
pub fn evaluate_recipe_at(recipe: &TransvectionRecipe, state: &StateVector) -> Result<Complex64> {
    let p = evaluate_recipe_with(recipe, &numeric_forms(state)?)?;
    Ok(p.constant_term())
}

/// Substitutes the amplitudes of a three-fermion state.
pub fn evaluate_at(poly: &SparsePolynomial, state: &StateVector) -> Result<Complex64> {
    let s = state.sector();
    if s.n_modes() != 3 || s.n_particles() != 3 {
        return Err(Error::domain(
            "amplitude symbols refer to three fermions in three modes",
        ));
    }
    poly.evaluate_amplitudes(state.amplitudes())
        .ok_or_else(|| Error::domain("polynomial still contains form variables"))
}

/// The recipes printed for the seven generators and the localized
/// invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedRecipe {
    I1,
    I2,
    IBC,
    IAC,
    IAB,
    IABC1,
    IABC2,
    IA1,
    IA2a,
    IA2b,
    IAL,
}

impl NamedRecipe {
    pub const ALL: [NamedRecipe; 11] = [
        NamedRecipe::I1,
        NamedRecipe::I2,
        NamedRecipe::IBC,
        NamedRecipe::IAC,
        NamedRecipe::IAB,
        NamedRecipe::IABC1,
        NamedRecipe::IABC2,
        NamedRecipe::IA1,
        NamedRecipe::IA2a,
        NamedRecipe::IA2b,
        NamedRecipe::IAL,
    ];

    /// The seven unconstrained generators.
    pub const GENERATORS: [NamedRecipe; 7] = [
        NamedRecipe::I1,
        NamedRecipe::I2,
        NamedRecipe::IBC,
        NamedRecipe::IAC,
        NamedRecipe::IAB,
        NamedRecipe::IABC1,
        NamedRecipe::IABC2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedRecipe::I1 => "I1",
            NamedRecipe::I2 => "I2",
            NamedRecipe::IBC => "IBC",
            NamedRecipe::IAC => "IAC",
            NamedRecipe::IAB => "IAB",
            NamedRecipe::IABC1 => "IABC1",
            NamedRecipe::IABC2 => "IABC2",
            NamedRecipe::IA1 => "IA1",
            NamedRecipe::IA2a => "IA2a",
            NamedRecipe::IA2b => "IA2b",
            NamedRecipe::IAL => "IAL",
        }
    }

    pub fn shortform(self) -> &'static str {
        match self {
            NamedRecipe::I1 => "M_ijk m31_i m12_j m23_k",
            NamedRecipe::I2 => "M_ijk m21_i m32_j m13_k",
            NamedRecipe::IBC => "m21_i M_ijk M_ljk m31_l m12_n m32_n m13_p m23_p",
            NamedRecipe::IAC => "m32_j M_ijk M_ilk m12_l m21_n m31_n m13_p m23_p",
            NamedRecipe::IAB => "m23_k M_ijk M_ijl m13_l m12_n m32_n m21_p m31_p",
            NamedRecipe::IABC1 => "m23_k M_ijk M_ijl M_npl m31_n m12_p m31_q m21_q m32_r m12_r m23_s m13_s",
            NamedRecipe::IABC2 => "m13_k M_ijk M_ijl M_npl m21_n m32_p m31_q m21_q m32_r m12_r m23_s m13_s",
            NamedRecipe::IA1 => "m21_i M_ijk M_ljk m31_l",
            NamedRecipe::IA2a => "m21_i M_ijk M_ljk M_lnp M_qnp m31_q m21_r m31_r",
            NamedRecipe::IA2b => "1/2 M_ijk M_ljk M_lnp M_inp m21_q m31_q m21_r m31_r",
            NamedRecipe::IAL => "m21_r m31_r",
        }
    }

    pub fn recipe(self) -> TransvectionRecipe {
        TransvectionRecipe::parse(self.shortform()).expect("shipped recipes are well formed")
    }

    pub fn is_localized(self) -> bool {
        matches!(
            self,
            NamedRecipe::IA1 | NamedRecipe::IA2a | NamedRecipe::IA2b | NamedRecipe::IAL
        )
    }
}
