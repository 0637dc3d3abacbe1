//! Point-hyperplane flags, Segre-embedded: the evaluation map has a kernel.

use varcodes::codes::{build_from_descriptor, min_distance, Search};
use varcodes::varieties::{Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    for (q, m) in [(2u64, 3usize), (3, 3), (2, 4)] {
        let code = build_from_descriptor(&Descriptor::new(q, Variety::Flag { m }), 1)?;
        println!(
            "F(1,{};{m}) over GF({q}): [{}, {}, {}], {} of the {} bilinear monomials are dependent",
            m - 1,
            code.n(),
            code.k(),
            min_distance(&code, &Search::default())?,
            code.kernel_dim(),
            m * m
        );
    }
    Ok(())
}
