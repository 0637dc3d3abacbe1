//! On-disk code artifacts: one JSON document per code.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::codes::{LinearCode, Provenance};
use crate::error::{Error, Result};
use crate::gf::{field_create, Elem, FieldDescriptor};
use crate::linalg::Matrix;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeArtifact {
    pub format_version: u32,
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub kernel_dim: usize,
    /// Rows of the reduced generator, as element indices.
    pub generator: Vec<Vec<u32>>,
    pub point_labels: Vec<String>,
    pub basis_labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl CodeArtifact {
    pub fn from_code(code: &LinearCode) -> CodeArtifact {
        let g = code.generator();
        CodeArtifact {
            format_version: FORMAT_VERSION,
            field: code.field().descriptor(),
            n: code.n(),
            k: code.k(),
            kernel_dim: code.kernel_dim(),
            generator: (0..g.rows()).map(|i| g.row(i).iter().map(|a| a.0).collect()).collect(),
            point_labels: code.point_labels().to_vec(),
            basis_labels: code.basis_labels().to_vec(),
            provenance: code.provenance().cloned(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::InvalidParams(format!(
                "unsupported artifact format version {}",
                self.format_version
            )));
        }
        let field = field_create(self.field.p as u64, self.field.e)?;
        if field.modulus() != self.field.modulus.as_slice() {
            return Err(Error::InvalidParams(format!(
                "modulus {:?} differs from the canonical {:?}",
                self.field.modulus,
                field.modulus()
            )));
        }
        let rows: Vec<Vec<Elem>> = self.generator.iter().map(|r| r.iter().map(|&x| Elem(x)).collect()).collect();
        if rows.iter().flatten().any(|&a| !field.contains(a)) {
            return Err(Error::InvalidParams("generator entry outside the field".into()));
        }
        if rows.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                got: rows.len(),
            });
        }
        let g = Matrix::from_rows(field, self.n, rows)?;
        LinearCode::from_parts(
            &g,
            self.point_labels.clone(),
            self.basis_labels.clone(),
            self.kernel_dim,
            self.provenance.clone(),
        )
    }
}

pub fn to_json(code: &LinearCode) -> String {
    serde_json::to_string_pretty(&CodeArtifact::from_code(code)).expect("artifact serializes")
}

pub fn from_json(text: &str) -> Result<LinearCode> {
    serde_json::from_str::<CodeArtifact>(text)?.to_code()
}

pub fn save(code: &LinearCode, path: &Path) -> Result<()> {
    std::fs::write(path, to_json(code) + "\n")?;
    Ok(())
}

pub fn load(path: &Path) -> Result<LinearCode> {
    from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_from_descriptor;
    use crate::varieties::Descriptor;

    fn hermitian() -> LinearCode {
        let d = Descriptor::from_json(r#"{"q":4,"family":"hermitian","m":2,"r":2}"#).unwrap();
        build_from_descriptor(&d, 1).unwrap()
    }

    #[test]
    fn round_trip_through_disk() {
        let code = hermitian();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("code.json");
        save(&code, &path).unwrap();
        let back = load(&path).unwrap();
        assert_eq!(back.generator(), code.generator());
        assert_eq!(back.point_labels(), code.point_labels());
        assert_eq!(back.provenance(), code.provenance());
        assert_eq!(to_json(&back), to_json(&code));
    }

    #[test]
    fn rejects_tampering() {
        let code = hermitian();
        let mut a = CodeArtifact::from_code(&code);
        a.format_version = 2;
        assert!(a.to_code().is_err());
        let mut a = CodeArtifact::from_code(&code);
        a.generator[0][0] = 9;
        assert!(a.to_code().is_err());
        let mut a = CodeArtifact::from_code(&code);
        a.generator.push(a.generator[0].clone());
        assert!(a.to_code().is_err());
        assert!(from_json("{").is_err());
    }
}
