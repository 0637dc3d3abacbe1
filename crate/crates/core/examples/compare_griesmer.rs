//! Measured parameters next to predictions, Griesmer and the applicable lower bounds.

use varcodes::codes::Search;
use varcodes::compare::compare;
use varcodes::varieties::{Descriptor, Variety};

fn main() {
    let entries = [
        (Descriptor::new(8, Variety::Quadric { m: 3, w: 2 }), 1),
        (Descriptor::new(8, Variety::Quadric { m: 3, w: 0 }), 1),
        (Descriptor::new(2, Variety::Grassmann { l: 2, m: 4 }), 1),
        (Descriptor::new(4, Variety::Hermitian { m: 3, r: 2 }), 1),
        (Descriptor::new(3, Variety::ProjectiveSpace { m: 3, affine: false }), 1),
    ];
    for row in compare(&entries, &Search::default()) {
        let bounds: Vec<String> = row.lower_bounds.iter().map(|b| format!("{}={}", b.name, b.d)).collect();
        println!(
            "{:<28} [{},{},{}]  griesmer {:>3}  attained {:<5}  {}",
            row.label,
            row.n.unwrap(),
            row.k.unwrap(),
            row.measured_d.unwrap(),
            row.griesmer_max_d.unwrap(),
            row.griesmer_attained.unwrap(),
            bounds.join(" ")
        );
    }
}
