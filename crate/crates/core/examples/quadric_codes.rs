//! Codes from nondegenerate quadrics, and classification of an arbitrary quadratic form.

use varcodes::codes::{build_from_descriptor, min_distance, Search};
use varcodes::gf::{field_of_order, Elem};
use varcodes::projgeom::Form;
use varcodes::varieties::{classify_quadric, quadric_normal_form, Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    let search = Search::default();
    let names = ["elliptic", "parabolic", "hyperbolic"];
    for (q, m, w) in [(8u64, 3usize, 0u8), (8, 3, 2), (3, 2, 1), (3, 4, 1)] {
        let f = field_of_order(q)?;
        let form = quadric_normal_form(m, w, &f)?;
        let code = build_from_descriptor(&Descriptor::new(q, Variety::Quadric { m, w }), 1)?;
        println!(
            "{:<10} in P^{m} over GF({q}): {form}  ->  [{}, {}, {}]",
            names[w as usize],
            code.n(),
            code.k(),
            min_distance(&code, &search)?
        );
    }

    // x0*x1 + x2^2 + x3^2 over GF(5): rank 4, so a cone-free surface; which kind?
    let f = field_of_order(5)?;
    let g = Form::from_terms(
        &f,
        4,
        2,
        [
            (vec![1, 1, 0, 0], Elem::ONE),
            (vec![0, 0, 2, 0], Elem::ONE),
            (vec![0, 0, 0, 2], Elem::ONE),
        ],
    )?;
    let c = classify_quadric(&f, &g)?;
    println!("{g}: rank {}, {} ({} points)", c.rank, names[c.w as usize], c.points);
    Ok(())
}
