//! Gabidulin codes, their rank histograms and a coset family of subcodes.

use cdc::gf::field;
use cdc::qnum::delsarte_rank_count;
use cdc::rankcode::{gabidulin, subcode_family};

fn main() -> cdc::Result<()> {
    let f = field(2)?;
    let (m, n, d) = (3, 4, 2);
    let code = gabidulin(&f, m, n, d)?;
    println!("[{m}x{n}, d={d}] Gabidulin code over GF(2): {} words", code.size());
    let mut hist = vec![0u64; m.min(n) + 1];
    for w in code.enumerate()? {
        hist[w.rank()] += 1;
    }
    for (i, h) in hist.iter().enumerate() {
        let expect = if i == 0 { 1u32.into() } else if i < d { 0u32.into() } else { delsarte_rank_count(m as u32, n as u32, d as u32, i as u32, 2)? };
        println!("  rank {i}: {h:>4} words (closed form {expect})");
    }
    let low = code.restrict_rank(2);
    println!("  words of rank <= 2: {}", low.count()?);
    println!("first nonzero word:\n{}", code.word(1));

    let fam = subcode_family(&f, 3, 3, 1, 2)?;
    println!("[3x3, 1] code split into {} cosets of the [3x3, 2] code, {} words each", fam.count(), fam.member_size());
    for r in 0..3 {
        println!("  coset {r} offset:\n{}", fam.offset(r));
    }
    Ok(())
}
