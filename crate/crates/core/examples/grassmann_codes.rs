//! Grassmann codes from Plücker coordinates, and a Schubert subcode.

use varcodes::codes::{build_from_descriptor, min_distance, weight_distribution, Search};
use varcodes::varieties::{Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    let search = Search::default();
    for q in [2u64, 3] {
        let code = build_from_descriptor(&Descriptor::new(q, Variety::Grassmann { l: 2, m: 4 }), 1)?;
        let w = weight_distribution(&code, &search)?;
        let d = w.min_weight().unwrap();
        println!("G(2,4) over GF({q}): [{}, {}, {d}], {} words of weight {d}", code.n(), code.k(), w.count(d));
        println!("  first points: {:?}", &code.point_labels()[..3]);
    }

    let schubert = Descriptor::new(2, Variety::Schubert { l: 2, m: 4, alpha: vec![2, 4] });
    let code = build_from_descriptor(&schubert, 1)?;
    println!("Schubert (2,4) in G(2,4)/GF(2): [{}, {}, {}]", code.n(), code.k(), min_distance(&code, &search)?);
    Ok(())
}
