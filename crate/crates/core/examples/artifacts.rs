//! Saving a code to disk and reading it back.

use varcodes::artifact;
use varcodes::codes::{build_from_descriptor, min_distance, Search};
use varcodes::varieties::Descriptor;

fn main() -> varcodes::error::Result<()> {
    let desc = Descriptor::from_json(r#"{"q": 3, "family": "flag", "m": 3}"#)?;
    let code = build_from_descriptor(&desc, 1)?;
    let path = std::env::temp_dir().join("varcodes-flag-gf3.json");
    artifact::save(&code, &path)?;

    let back = artifact::load(&path)?;
    println!("{} -> [{}, {}]", path.display(), back.n(), back.k());
    println!("provenance: {}", back.provenance().unwrap().descriptor.label());
    println!("d = {}", min_distance(&back, &Search::default())?);
    print!("{}", back.generator().to_csv());
    std::fs::remove_file(&path)?;
    Ok(())
}
