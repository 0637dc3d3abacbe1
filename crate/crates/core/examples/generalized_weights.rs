//! Generalized Hamming weights d_1 < d_2 < ... < d_k by subspace search.

use varcodes::codes::{build_from_descriptor, ghw_hierarchy, Search};
use varcodes::varieties::{Descriptor, Variety};

fn main() -> varcodes::error::Result<()> {
    let search = Search::default();
    for desc in [
        Descriptor::new(2, Variety::ProjectiveSpace { m: 2, affine: false }),
        Descriptor::new(2, Variety::Grassmann { l: 2, m: 4 }),
        Descriptor::new(4, Variety::Hermitian { m: 2, r: 2 }),
        Descriptor::new(3, Variety::Quadric { m: 3, w: 2 }),
    ] {
        let code = build_from_descriptor(&desc, 1)?;
        println!("{}: {:?}", desc.label(), ghw_hierarchy(&code, &search)?);
    }
    Ok(())
}
