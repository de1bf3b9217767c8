//! Writes a code in code file form, reads it back and checks it, then shows the
//! witness reported for an overstated distance.

use cdc::cli::{read_code, write_code};
use cdc::construct::lifted_mrd;
use cdc::gf::field;
use cdc::verify::{verify_cdc, VerifyOptions};

fn main() -> cdc::Result<()> {
    let f = field(3)?;
    let code = lifted_mrd(&f, 2, 3, 2)?;
    let text = write_code(&code);
    println!("{}", text.lines().take(8).collect::<Vec<_>>().join("\n"));
    println!("...");

    let back = read_code(&text)?;
    assert_eq!(write_code(&back), text);
    let opts = VerifyOptions::default();
    for line in verify_cdc(&back, 4, &opts).lines() {
        println!("{line}");
    }
    let over = verify_cdc(&back, 6, &opts);
    println!("claiming d = 6: pass = {}", over.pass);
    if let Some(w) = &over.witness {
        println!("{w}");
    }
    Ok(())
}
