//! A small instance of the mixed dimension construction with inserted parts,
//! built word by word, counted by formula and verified.

use std::collections::BTreeMap;

use cdc::construct::{
    c1_count, c2_count, insert_c3, insert_c4, mixed_dimension, multilevel_insert_code, small_cdc, CodeSet, InsertParams,
    MixParams,
};
use cdc::gf::field;
use cdc::qnum::big;
use cdc::verify::{verify_cdc, verify_insertion_condition, VerifyOptions};

fn main() -> cdc::Result<()> {
    let f = field(2)?;
    let p = MixParams::new(4, 4, 4, 2, &[4], &[4])?;
    let ip = InsertParams { t1: 2, t2: 2, a1: 2, a2: 2, b1: 1, b2: 1, c: None };

    let x = small_cdc(&f, 4, 2, 4)?;
    let (c1, c2) = mixed_dimension(&f, &p, &x, &x)?;
    let eta: BTreeMap<usize, _> = [(4, big(1))].into();
    println!("C1: {} words (formula {})", c1.len(), c1_count(2, &p, &eta)?);
    println!("C2: {} words (formula {})", c2.len(), c2_count(2, &p, &eta)?);

    let a = small_cdc(&f, 2, 2, 2)?;
    let c3 = insert_c3(&f, &p, &ip, &a, &a)?;
    let c4 = insert_c4(&f, &p, &ip, &a, &a)?;
    let ml = multilevel_insert_code(&f, &p, &ip)?;
    println!("C3: {}, C4: {}, multilevel: {}", c3.len(), c4.len(), ml.len());
    for (name, part) in [("C3", &c3), ("C4", &c4), ("multilevel", &ml)] {
        println!("  insertion condition on {name}: {}", verify_insertion_condition(part, &p).pass);
    }

    let all = CodeSet::union(&[&c1, &c2, &c3, &c4, &ml], "toy")?;
    let r = verify_cdc(&all, 4, &VerifyOptions::default());
    for line in r.lines() {
        println!("{line}");
    }
    Ok(())
}
