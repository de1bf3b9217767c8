//! Echelon Ferrers forms, Ferrers diagram rank metric codes and lifting.

use cdc::ferrers::{build_fdrmc, diagram_from_vector, echelon_ferrers_form, lift, singleton_like_bound, tableaux_string};
use cdc::gf::field;
use cdc::matq::{ferrers_tableaux, ident_string, parse_ident, subspace, MatF};
use cdc::verify::{verify_cdc, VerifyOptions};

fn main() -> cdc::Result<()> {
    let f = field(2)?;
    let u = subspace(&MatF::parse(&f, "11000100;00100110;00001001")?);
    let v = u.ident();
    println!("i(U) = {}", ident_string(&v));
    println!("EF(i(U)):\n{}", echelon_ferrers_form(&v));
    let (diagram, fill) = ferrers_tableaux(&u);
    println!("Ferrers tableaux form:\n{}", tableaux_string(&diagram, &fill));

    let ident = parse_ident("10101000")?;
    let shape = diagram_from_vector(&ident)?;
    println!("diagram of 10101000 ({} dots):\n{shape}", shape.dots());
    for d in 1..=3 {
        let code = build_fdrmc(&f, &shape, d, None)?;
        println!("  d={d}: {} words, bound {}", code.len(), singleton_like_bound(&shape, d, 2));
    }
    let code = build_fdrmc(&f, &shape, 2, None)?;
    let lifted = lift(&code, &ident)?;
    let report = verify_cdc(&lifted, 4, &VerifyOptions::default());
    println!("lifted code: {} subspaces of F_2^8, verified d_S >= 4: {}", lifted.len(), report.pass);
    Ok(())
}
