//! Evaluation codes and their exact parameters.

mod enumerate;
mod ghw;

pub use enumerate::{min_distance, weight_distribution, Search, WeightEnumerator, DEFAULT_BUDGET};
pub use ghw::{ghw, ghw_hierarchy};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;
use crate::projgeom::{evaluation_matrix, Form};
use crate::varieties::{construct, Descriptor, PointSet};

/// Where a code came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub descriptor: Descriptor,
    pub h: u32,
}

/// A linear code with its generator in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    generator: Matrix,
    point_labels: Vec<String>,
    basis_labels: Vec<String>,
    kernel_dim: usize,
    provenance: Option<Provenance>,
}

impl LinearCode {
    /// The row space of `m`, with generic column labels.
    pub fn from_generator(m: &Matrix) -> LinearCode {
        let generator = m.row_basis();
        let basis_labels = (0..generator.rows()).map(|i| format!("g{i}")).collect();
        LinearCode {
            field: m.field().clone(),
            point_labels: (0..m.cols()).map(|j| format!("c{j}")).collect(),
            basis_labels,
            kernel_dim: m.rows() - generator.rows(),
            generator,
            provenance: None,
        }
    }

    /// Reassembles a code from stored parts; the generator is re-reduced.
    pub fn from_parts(
        generator: &Matrix,
        point_labels: Vec<String>,
        basis_labels: Vec<String>,
        kernel_dim: usize,
        provenance: Option<Provenance>,
    ) -> Result<LinearCode> {
        if point_labels.len() != generator.cols() {
            return Err(Error::DimensionMismatch {
                expected: generator.cols(),
                got: point_labels.len(),
            });
        }
        let g = generator.row_basis();
        if g.rows() != generator.rows() {
            return Err(Error::InvalidParams("generator rows are not independent".into()));
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            generator: g,
            point_labels,
            basis_labels,
            kernel_dim,
            provenance,
        })
    }

    pub fn with_provenance(mut self, p: Provenance) -> LinearCode {
        self.provenance = Some(p);
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn point_labels(&self) -> &[String] {
        &self.point_labels
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// Dimension of the space of basis functions vanishing on every point.
    pub fn kernel_dim(&self) -> usize {
        self.kernel_dim
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.n()).any(|j| (0..self.k()).all(|i| self.generator.get(i, j).is_zero()))
    }

    /// Codeword of a message of length k.
    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        self.generator.transpose().mul_vec(msg)
    }

    /// The same code with column `j` scaled by `c`.
    pub fn scale_column(&self, j: usize, c: Elem) -> LinearCode {
        let mut g = self.generator.clone();
        g.scale_col(j, c);
        let mut out = self.clone();
        out.generator = g.row_basis();
        out
    }
}

/// Evaluates `basis` on `points`; k is the rank of the evaluation matrix.
pub fn build_evaluation_code(points: &PointSet, basis: &[Form], basis_labels: &[String]) -> Result<LinearCode> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let field = points.field();
    let eval = evaluation_matrix(field, basis, points.points())?;
    let generator = eval.row_basis();
    let k = generator.rows();
    let (_, left_kernel) = eval.transpose().rank_and_kernel();
    let kernel_dim = left_kernel.rows();
    if basis.len() - kernel_dim != k {
        return Err(Error::Invariant(format!(
            "k = {k} but {} basis functions with a {kernel_dim}-dimensional kernel",
            basis.len()
        )));
    }
    Ok(LinearCode {
        field: field.clone(),
        generator,
        point_labels: points.labels().to_vec(),
        basis_labels: basis_labels.to_vec(),
        kernel_dim,
        provenance: None,
    })
}

/// Builds `C_h(X; S)` for a descriptor.
pub fn build_from_descriptor(desc: &Descriptor, h: u32) -> Result<LinearCode> {
    let c = construct(desc, h)?;
    Ok(build_evaluation_code(&c.points, &c.basis, &c.basis_labels)?.with_provenance(Provenance {
        descriptor: desc.clone(),
        h,
    }))
}

/// For the l = 6 Del Pezzo code: `true` for d = q^2 + 4q (an Eckardt point),
/// `false` for d = q^2 + 4q + 1.
pub fn eckardt_detect(q: u64, d: u64) -> Result<bool> {
    let e = q * q + 4 * q;
    match d {
        _ if d == e => Ok(true),
        _ if d == e + 1 => Ok(false),
        _ => Err(Error::UnexpectedDistance { d, expected: [e, e + 1] }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    fn desc(json: &str) -> Descriptor {
        Descriptor::from_json(json).unwrap()
    }

    #[test]
    fn build_examples() {
        let c = build_from_descriptor(&desc(r#"{"q":2,"family":"projective_space","m":2}"#), 1).unwrap();
        assert_eq!((c.n(), c.k(), c.kernel_dim()), (7, 3, 0));
        let c = build_from_descriptor(&desc(r#"{"q":2,"family":"flag","m":3}"#), 1).unwrap();
        assert_eq!((c.n(), c.k(), c.kernel_dim()), (21, 8, 1));
        let c = build_from_descriptor(&desc(r#"{"q":4,"family":"hermitian","m":3,"r":2}"#), 1).unwrap();
        assert_eq!((c.n(), c.k()), (45, 4));
        // conic in P^2 over GF(3), degree 2: the conic equation itself vanishes
        let c = build_from_descriptor(&desc(r#"{"q":3,"family":"quadric","m":2,"w":1}"#), 2).unwrap();
        assert_eq!((c.n(), c.k(), c.kernel_dim()), (4, 4, 2));
    }

    #[test]
    fn generator_is_reduced() {
        let c = build_from_descriptor(&desc(r#"{"q":3,"family":"grassmann","l":2,"m":4}"#), 1).unwrap();
        let (r, _) = c.generator().rref();
        assert_eq!(&r, c.generator());
        assert!(!c.has_zero_column());
    }

    #[test]
    fn empty_point_set_is_rejected() {
        let f = field_of_order(2).unwrap();
        let ps = PointSet::new(f, 3);
        assert!(matches!(build_evaluation_code(&ps, &[], &[]), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn eckardt_dichotomy() {
        assert!(!eckardt_detect(5, 46).unwrap());
        assert!(eckardt_detect(5, 45).unwrap());
        assert!(matches!(eckardt_detect(5, 40), Err(Error::UnexpectedDistance { .. })));
    }
}
