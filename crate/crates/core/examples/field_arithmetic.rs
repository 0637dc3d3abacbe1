//! Arithmetic in GF(q) with canonical element indices.

use varcodes::gf::{field_of_order, Elem};

fn main() -> varcodes::error::Result<()> {
    let f = field_of_order(9)?;
    println!("GF({}) = GF({})[x]/({:?}), generator {}", f.q(), f.p(), f.modulus(), f.generator());

    let (a, b) = (Elem(4), Elem(7));
    println!("{a} + {b} = {}", f.add(a, b));
    println!("{a} * {b} = {}", f.mul(a, b));
    println!("{a} / {b} = {}", f.div(a, b)?);
    println!("{a}^-1 = {}", f.inv(a)?);

    // GF(9) is a quadratic extension of GF(3): conjugation fixes exactly the subfield.
    let fixed: Vec<Elem> = f.elements().filter(|&x| f.conjugate(x, 3).unwrap() == x).collect();
    println!("fixed by x -> x^3: {fixed:?}");

    for x in f.units().take(4) {
        println!("log({x}) = {}", f.log(x).unwrap());
    }
    Ok(())
}
