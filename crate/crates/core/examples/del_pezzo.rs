//! Del Pezzo surfaces: P^2 blown up at l points in general position.

use varcodes::codes::{build_from_descriptor, eckardt_detect, min_distance, Search};
use varcodes::gf::field_of_order;
use varcodes::varieties::{general_position_points, Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    let search = Search::default();
    for l in 1..=5 {
        let code = build_from_descriptor(&Descriptor::new(5, Variety::DelPezzo { l }), 1)?;
        println!("l={l} over GF(5): [{}, {}, {}]", code.n(), code.k(), min_distance(&code, &search)?);
    }

    // Six points with no three collinear always lie on a conic over GF(5).
    match general_position_points(6, &field_of_order(5)?) {
        Ok(_) => println!("found six points over GF(5)"),
        Err(e) => println!("l=6 over GF(5): {e}"),
    }

    let cubic = build_from_descriptor(&Descriptor::new(7, Variety::DelPezzo { l: 6 }), 1)?;
    let d = min_distance(&cubic, &search)?;
    let eckardt = eckardt_detect(7, d)?;
    println!("cubic surface over GF(7): [{}, {}, {d}], Eckardt point: {eckardt}", cubic.n(), cubic.k());
    Ok(())
}
