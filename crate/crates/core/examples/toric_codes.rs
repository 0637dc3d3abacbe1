//! Toric codes on the torus (F_q^*)^s, and the P^1 x P^1 bidegree codes.

use varcodes::bounds::covering_family_bound;
use varcodes::codes::{build_from_descriptor, min_distance, Search};
use varcodes::varieties::{Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    let search = Search::default();
    // Hexagon-like polygon over GF(8).
    let lattice = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![1, 2]];
    let code = build_from_descriptor(&Descriptor::new(8, Variety::Toric { s: 2, lattice }), 1)?;
    println!("toric code over GF(8): [{}, {}, {}]", code.n(), code.k(), min_distance(&code, &search)?);

    for (q, alpha, beta) in [(3u64, 1u32, 1u32), (4, 2, 1), (5, 2, 2)] {
        let code = build_from_descriptor(&Descriptor::new(q, Variety::ProductP1xP1 { alpha, beta }), 1)?;
        let d = min_distance(&code, &search)?;
        let fibers = q + 1;
        let bound = covering_family_bound(code.n() as u64, fibers, fibers, beta as u64, alpha as u64)?;
        println!("P1xP1 bidegree ({alpha},{beta}) over GF({q}): [{}, {}, {d}], covering bound {bound}", code.n(), code.k());
    }
    Ok(())
}
