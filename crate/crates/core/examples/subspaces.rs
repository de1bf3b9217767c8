//! Reduced row echelon forms, identifying vectors, distances and the τ embedding.

use cdc::gf::field;
use cdc::matq::{embed_tau, ident_string, intersection_dim, subspace, subspace_distance, MatF};

fn main() -> cdc::Result<()> {
    let f = field(2)?;
    let u = subspace(&MatF::parse(&f, "11000100;00100110;00001001")?);
    let v = subspace(&MatF::parse(&f, "10010000;01001000;00100101")?);
    println!("U in RREF:\n{}", u.rref());
    println!("i(U) = {}", ident_string(&u.ident()));
    println!("V in RREF:\n{}", v.rref());
    println!("i(V) = {}", ident_string(&v.ident()));
    println!("dim(U ∩ V) = {}, d_S(U, V) = {}", intersection_dim(&u, &v)?, subspace_distance(&u, &v)?);

    let a = MatF::parse(&f, "1000;0010")?;
    let b = MatF::parse(&f, "11;01")?;
    let t = embed_tau(&a, &b)?;
    println!("τ_A(B) with A = [1000; 0010], B = [11; 01]:\n{t}");
    println!("rank of A stacked on τ_A(B): {}", MatF::vcat(&f, &[&a, &t]).rank());

    let f3 = field(3)?;
    let w = subspace(&MatF::parse(&f3, "1201;2112")?);
    println!("over GF(3):\n{}", w.rref());
    Ok(())
}
