//! Projective Reed-Muller codes: all degree-h forms evaluated on P^m(F_q).

use varcodes::codes::{build_from_descriptor, min_distance, Search};
use varcodes::predict::predict;
use varcodes::varieties::{Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    let search = Search::default();
    for (q, m, h) in [(2, 2, 1), (3, 2, 2), (4, 2, 3), (5, 1, 4)] {
        let desc = Descriptor::new(q, Variety::ProjectiveSpace { m, affine: false });
        let code = build_from_descriptor(&desc, h)?;
        let d = min_distance(&code, &search)?;
        let p = predict(&desc, h)?;
        println!(
            "q={q} m={m} h={h}: [{}, {}, {d}], expected d = (q+1-h) q^(m-1) = {}",
            code.n(),
            code.k(),
            p.d.unwrap().values[0]
        );
    }

    // The affine part only: q^m points.
    let affine = Descriptor::new(3, Variety::ProjectiveSpace { m: 2, affine: true });
    let code = build_from_descriptor(&affine, 2)?;
    println!("affine GF(3)^2, h=2: [{}, {}, {}]", code.n(), code.k(), min_distance(&code, &search)?);
    Ok(())
}
