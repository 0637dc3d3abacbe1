//! Hermitian curves and surfaces over GF(r^2) are two-weight codes.

use varcodes::codes::{build_from_descriptor, weight_distribution, Search};
use varcodes::gf::field_of_order;
use varcodes::varieties::{hermitian_form, Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    for (r, m) in [(2u32, 2usize), (2, 3), (3, 2)] {
        let q = (r * r) as u64;
        let form = hermitian_form(m, r, &*field_of_order(q)?)?;
        let code = build_from_descriptor(&Descriptor::new(q, Variety::Hermitian { m, r }), 1)?;
        let w = weight_distribution(&code, &Search::default())?;
        println!("{form} over GF({q}): [{}, {}]", code.n(), code.k());
        for (weight, count) in &w.counts {
            println!("  A_{weight} = {count}");
        }
    }
    Ok(())
}
