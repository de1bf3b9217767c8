//! Exact Gaussian binomials, MRD sizes, rank distributions and the N_q correction.

use cdc::qnum::{delsarte_rank_count, delta_mrd, delta_rrmc, gauss_binom, n_q, ConstantsTable};

fn main() -> cdc::Result<()> {
    println!("[n k]_2 for n <= 8:");
    for n in 0..=8u32 {
        let row: Vec<String> = (0..=n).map(|k| gauss_binom(n, k, 2).to_string()).collect();
        println!("  n={n}: {}", row.join(" "));
    }
    println!("[18 6]_2 = {}", gauss_binom(18, 6, 2));
    println!("[12 4]_3 = {}", gauss_binom(12, 4, 3));

    let (m, n, d, q) = (4, 6, 2, 2);
    println!("Δ({m},{n},{d})_{q} = {}", delta_mrd(m, n, d, q));
    for i in d..=m {
        println!("  D(i={i}) = {}", delsarte_rank_count(m, n, d, i, q)?);
    }
    println!("words of rank <= 2: {}", delta_rrmc(m, n, d, 2, q));

    let table = ConstantsTable::default_table()?;
    println!("N_2(8, 2, 4) = {}", n_q(8, 2, 4, 2, &table)?);
    println!("N_2(10, 2, 5) = {}", n_q(10, 2, 5, 2, &table)?);
    Ok(())
}
