//! The integer bound calculators on their own.

use varcodes::bounds::counts::{hermitian_count, nondegenerate_quadric_count};
use varcodes::bounds::{
    cayley_bacharach_bound, dl_a24_params, elementary_bound, hermitian_ch_bound, lachaud_section_bounds,
    ruled_surface_bound, sorensen_bound, weil_hypersurface_interval,
};

fn main() -> varcodes::error::Result<()> {
    let n = hermitian_count(2, 3)?;
    println!("Hermitian surface over GF(4): {n} points");
    println!("  elementary (s=3, dim 2): d >= {}", elementary_bound(n, 3, 2, 4)?);
    println!("  hyperplane sections:     {:?}", lachaud_section_bounds(4, 3, 3, n, Some(n))?);
    println!("  h=2 degree bound:        d >= {}", hermitian_ch_bound(n, 2, 2)?);
    println!("  conjectured, h=2:        d = {}", sorensen_bound(n, 2, 2));

    let w = weil_hypersurface_interval(4, 3, 3)?;
    println!("smooth cubic surfaces over GF(4) have {}..={} points", w.lo, w.hi);
    println!("elliptic quadric in P^3 over GF(8): {} points", nondegenerate_quadric_count(8, 3, 0)?);

    let cb = cayley_bacharach_bound(&[3, 3], 2)?;
    println!("two cubics in P^2, h=2: d >= {}", cb.d_lower);
    println!("ruled surface a=9, q=8, b1=3, b2=1, e=0: {:?}", ruled_surface_bound(9, 8, 3, 1, 0)?);
    println!("2A4 surface over GF(4), h=1: {:?}", dl_a24_params(2, 1)?);
    Ok(())
}
