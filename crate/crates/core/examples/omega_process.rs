//! Build the invariants symbolically by transvection and compare them with
//! the direct formulas.

use fermislocc::omega::{
    build_forms, evaluate_recipe, independence_rank, proportionality_constant, reference_value, transvect, FormKind,
    IndependenceSet, NamedRecipe, VarFamily,
};

fn main() -> fermislocc::Result<()> {
    let forms = build_forms();
    let pair = transvect(forms.get(FormKind::M21), forms.get(FormKind::M31), VarFamily::X);
    println!("(m21, m31)_x has {} terms", pair.n_terms());

    for r in NamedRecipe::ALL {
        let poly = evaluate_recipe(&r.recipe())?;
        let c = proportionality_constant(&poly, |s| reference_value(r, s), 20, 1)?;
        println!(
            "{:<6} {:<62} {:>4} monomials, constant {:+.3}",
            r.name(),
            r.shortform(),
            poly.n_terms(),
            c.re
        );
    }
    for set in [IndependenceSet::Degree8, IndependenceSet::Degree12] {
        println!("{set:?}: rank {} of {}", independence_rank(set, 0), set.size());
    }
    Ok(())
}
