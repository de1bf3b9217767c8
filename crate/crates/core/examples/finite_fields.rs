//! Arithmetic in GF(9) and in the extension GF(2^4).

use cdc::gf::{ext_field, field};

fn main() -> cdc::Result<()> {
    let f9 = field(9)?;
    println!("{f9}: characteristic {}, degree {}", f9.characteristic(), f9.prime_degree());
    println!("multiplication table:");
    for a in f9.elements() {
        let row: Vec<String> = f9.elements().map(|b| f9.mul(a, b).to_string()).collect();
        println!("  {}", row.join(" "));
    }
    for a in f9.elements().skip(1) {
        assert_eq!(f9.mul(a, f9.inv(a)), 1);
    }

    let f2 = field(2)?;
    let f16 = ext_field(&f2, 4)?;
    let g = f16.primitive_element();
    println!("{f16}: modulus coefficients {:?}, primitive element {g}", f16.modulus());
    let mut x = 1;
    for i in 0..15 {
        println!("  g^{i:<2} = {:>2}  coords {:?}", x, f16.to_coords(x));
        x = f16.mul(x, g);
    }
    assert_eq!(x, 1);
    Ok(())
}
