//! Cayley Ω-process: symbolic forms built from three-fermion amplitudes,
//! transvection recipes, and numerical cross-checks against the invariants.

pub mod crossval;
pub mod forms;
pub mod poly;
pub mod recipe;

pub use crossval::{
    degree16_probe, independence_rank, is_index_balanced, is_mode_balanced, numerical_rank, proportionality_constant,
    proportionality_with, rank_of_evaluators, rank_of_set, reference_value, Degree16Report, IndependenceSet,
};
pub use forms::{build_forms, numeric_forms, FormCollection, FormKind};
pub use poly::{Monomial, SparsePolynomial, Symbol, VarFamily, AMPLITUDE_COUNT};
pub use recipe::{
    evaluate_at, evaluate_recipe, evaluate_recipe_at, evaluate_recipe_with, transvect, NamedRecipe, TransvectionRecipe,
};

#[cfg(test)]
mod tests;
