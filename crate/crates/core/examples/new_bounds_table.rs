//! Exact evaluation of the lower bound recipes and the table of new bounds.

use cdc::bounds::{evaluate, table_new_bounds, BoundRecipe};
use cdc::qnum::ConstantsTable;

fn main() -> cdc::Result<()> {
    let table = ConstantsTable::default_table()?;
    for recipe in [
        BoundRecipe::C212 { h: 0 },
        BoundRecipe::C212 { h: 3 },
        BoundRecipe::Cq12 { q: 3, delta: 2, h: 0 },
        BoundRecipe::C2k { q: 2, k: 6, delta: 2 },
        BoundRecipe::New2 { q: 2, n: 15 },
    ] {
        let e = evaluate(&recipe, &table)?;
        println!("{}: A_{}({},{},{{{}}}) >= {}", recipe.id(), e.q, e.n, e.d, e.k, e.value);
        for (name, v) in &e.parts {
            println!("    {name:<12} {v}");
        }
    }
    println!();
    print!("{}", table_new_bounds(&table));
    Ok(())
}
