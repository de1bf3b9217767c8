//! Identifying vector families for the multilevel enhancements and the size of the
//! lifted rank-restricted codes.

use cdc::construct::{multilevel_family_insert, multilevel_family_mix, multilevel_insert_count, rfdrmc_size, InsertParams, MixParams};
use cdc::gf::field;
use cdc::matq::ident_string;

fn main() -> cdc::Result<()> {
    let p = MixParams::new(6, 12, 6, 2, &[6], &[6, 5])?;
    let ip = InsertParams { t1: 2, t2: 8, a1: 2, a2: 4, b1: 1, b2: 1, c: Some((1, 1)) };
    let f = field(2)?;
    println!("inserting family for n = 18, k = 6, δ = 2 (prefix length {}):", p.prefix_len());
    for v in multilevel_family_insert(&p, &ip)? {
        println!("  {}  {}", ident_string(&v), rfdrmc_size(&f, &v, p.prefix_len(), 2)?);
    }
    println!("total: {}", multilevel_insert_count(2, &p, &ip)?);

    let q = MixParams::new(8, 4, 4, 2, &[4, 3], &[4])?;
    println!("mixing family for n = 12, k = 4, δ = 2:");
    for v in multilevel_family_mix(&q)? {
        println!("  {}", ident_string(&v));
    }
    Ok(())
}
