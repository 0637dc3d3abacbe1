//! Evaluation point sets for the supported variety families.
//!
//! A [`Descriptor`] names a family and its parameters; [`construct`] turns it
//! into a [`PointSet`] together with the function basis the code is built from.

mod delpezzo;
mod grassmann;
mod hypersurface;
mod toric;

pub use delpezzo::{delpezzo_points, general_position_points, DelPezzo};
pub use grassmann::{flag_points, grassmann_points, schubert_points};
pub use hypersurface::{
    affine_complete_intersection, classify_quadric, complete_intersection_points, hermitian_form,
    hypersurface_points, quadric_normal_form, QuadricClass,
};
pub use toric::{product_p1p1_basis, product_p1p1_points, toric_points};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{field_of_order, Elem, Field, FieldDescriptor};
use crate::projgeom::{enumerate_monomials, enumerate_projective_points, Form, FormJson};

/// A variety family together with the field it lives over.
///
/// JSON encoding: `{"q": 4, "family": "hermitian", "m": 3, "r": 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descriptor {
    pub q: u64,
    #[serde(flatten)]
    pub variety: Variety,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Variety {
    ProjectiveSpace {
        m: usize,
        #[serde(default)]
        affine: bool,
    },
    /// Nondegenerate quadric in normal form with character `w`.
    Quadric { m: usize, w: u8 },
    QuadricForm { form: FormJson },
    Hermitian { m: usize, r: u32 },
    Grassmann { l: usize, m: usize },
    Schubert { l: usize, m: usize, alpha: Vec<usize> },
    /// Point-hyperplane flags of P^{m-1}.
    Flag { m: usize },
    /// P^1 x P^1 with the bidegree used by the code.
    #[serde(rename = "p1xp1")]
    ProductP1xP1 { alpha: u32, beta: u32 },
    Toric { s: usize, lattice: Vec<Vec<i64>> },
    DelPezzo { l: usize },
    CompleteIntersection { forms: Vec<FormJson> },
}

impl Variety {
    pub fn family_name(&self) -> &'static str {
        match self {
            Variety::ProjectiveSpace { .. } => "projective_space",
            Variety::Quadric { .. } => "quadric",
            Variety::QuadricForm { .. } => "quadric_form",
            Variety::Hermitian { .. } => "hermitian",
            Variety::Grassmann { .. } => "grassmann",
            Variety::Schubert { .. } => "schubert",
            Variety::Flag { .. } => "flag",
            Variety::ProductP1xP1 { .. } => "p1xp1",
            Variety::Toric { .. } => "toric",
            Variety::DelPezzo { .. } => "del_pezzo",
            Variety::CompleteIntersection { .. } => "complete_intersection",
        }
    }

    /// Families whose function space is fixed by the descriptor itself.
    pub fn fixed_function_space(&self) -> bool {
        matches!(
            self,
            Variety::ProductP1xP1 { .. } | Variety::Toric { .. } | Variety::DelPezzo { .. }
        )
    }
}

impl Descriptor {
    pub fn new(q: u64, variety: Variety) -> Descriptor {
        Descriptor { q, variety }
    }

    pub fn from_json(text: &str) -> Result<Descriptor> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn field(&self) -> Result<Field> {
        field_of_order(self.q)
    }

    /// Short human-readable summary, e.g. `hermitian(m=3,r=2)/GF(4)`.
    pub fn label(&self) -> String {
        let params = match &self.variety {
            Variety::ProjectiveSpace { m, affine } => {
                format!("m={m}{}", if *affine { ",affine" } else { "" })
            }
            Variety::Quadric { m, w } => format!("m={m},w={w}"),
            Variety::QuadricForm { form } => format!("nvars={}", form.nvars),
            Variety::Hermitian { m, r } => format!("m={m},r={r}"),
            Variety::Grassmann { l, m } => format!("l={l},m={m}"),
            Variety::Schubert { l, m, alpha } => format!("l={l},m={m},alpha={alpha:?}"),
            Variety::Flag { m } => format!("m={m}"),
            Variety::ProductP1xP1 { alpha, beta } => format!("alpha={alpha},beta={beta}"),
            Variety::Toric { s, lattice } => format!("s={s},#P={}", lattice.len()),
            Variety::DelPezzo { l } => format!("l={l}"),
            Variety::CompleteIntersection { forms } => format!("#forms={}", forms.len()),
        };
        format!("{}({params})/GF({})", self.variety.family_name(), self.q)
    }
}

/// Ordered evaluation points with per-point labels.
#[derive(Clone, Debug)]
pub struct PointSet {
    field: Field,
    nvars: usize,
    points: Vec<Vec<Elem>>,
    labels: Vec<String>,
    notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetJson {
    pub field: FieldDescriptor,
    pub nvars: usize,
    pub points: Vec<Vec<Elem>>,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PointSet {
    pub fn new(field: Field, nvars: usize) -> PointSet {
        PointSet {
            field,
            nvars,
            points: Vec::new(),
            labels: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Appends a point labelled by its coordinates.
    pub fn push(&mut self, coords: Vec<Elem>) {
        let label = format_point(&coords);
        self.push_labeled(coords, label);
    }

    pub fn push_labeled(&mut self, coords: Vec<Elem>, label: String) {
        debug_assert_eq!(coords.len(), self.nvars);
        self.points.push(coords);
        self.labels.push(label);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn to_json(&self) -> PointSetJson {
        PointSetJson {
            field: self.field.descriptor(),
            nvars: self.nvars,
            points: self.points.clone(),
            labels: self.labels.clone(),
            notes: self.notes.clone(),
        }
    }
}

pub fn format_point(coords: &[Elem]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.0.to_string()).collect();
    format!("({})", inner.join(":"))
}

/// A point set plus the functions evaluated on it.
#[derive(Clone, Debug)]
pub struct Construction {
    pub points: PointSet,
    pub basis: Vec<Form>,
    pub basis_labels: Vec<String>,
}

impl Construction {
    fn with_monomials(points: PointSet, h: u32) -> Construction {
        let (basis, basis_labels) = monomial_basis(points.nvars(), h);
        Construction {
            points,
            basis,
            basis_labels,
        }
    }
}

/// All monomials of degree `h` in `nvars` variables, with display labels.
pub fn monomial_basis(nvars: usize, h: u32) -> (Vec<Form>, Vec<String>) {
    let basis: Vec<Form> = enumerate_monomials(nvars - 1, h)
        .into_iter()
        .map(Form::monomial)
        .collect();
    let labels = basis.iter().map(|f| f.to_string()).collect();
    (basis, labels)
}

/// The point set `S` of a descriptor and the degree-`h` function space on it.
pub fn construct(desc: &Descriptor, h: u32) -> Result<Construction> {
    let field = desc.field()?;
    if desc.variety.fixed_function_space() && h != 1 {
        return Err(Error::InvalidParams(format!(
            "{} fixes its function space in the descriptor; h must be 1",
            desc.variety.family_name()
        )));
    }
    if h == 0 {
        return Err(Error::InvalidParams("h must be at least 1".into()));
    }
    match &desc.variety {
        Variety::ProjectiveSpace { m, affine } => {
            if *m < 1 {
                return Err(Error::InvalidParams("projective space needs m >= 1".into()));
            }
            let mut ps = PointSet::new(field.clone(), m + 1);
            for p in enumerate_projective_points(*m, &field, *affine) {
                ps.push(p.into_coords());
            }
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::Quadric { m, w } => {
            let f = quadric_normal_form(*m, *w, &field)?;
            let ps = hypersurface_points(&field, &f)?;
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::QuadricForm { form } => {
            let f = Form::from_json(&field, form)?;
            if f.degree() != 2 || f.is_zero() {
                return Err(Error::NotQuadratic);
            }
            let ps = hypersurface_points(&field, &f)?;
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::Hermitian { m, r } => {
            let f = hermitian_form(*m, *r, &field)?;
            let ps = hypersurface_points(&field, &f)?;
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::Grassmann { l, m } => {
            let ps = grassmann_points(*l, *m, &field)?;
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::Schubert { l, m, alpha } => {
            let ps = schubert_points(*l, *m, alpha, &field)?;
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::Flag { m } => {
            let ps = flag_points(*m, &field)?;
            Ok(Construction::with_monomials(ps, h))
        }
        Variety::ProductP1xP1 { alpha, beta } => {
            let points = product_p1p1_points(&field);
            let (basis, basis_labels) = product_p1p1_basis(*alpha, *beta);
            Ok(Construction {
                points,
                basis,
                basis_labels,
            })
        }
        Variety::Toric { s, lattice } => toric_points(*s, lattice, &field),
        Variety::DelPezzo { l } => {
            let dp = delpezzo_points(*l, &field)?;
            let n = dp.points.nvars();
            let (basis, _) = monomial_basis(n, 1);
            Ok(Construction {
                points: dp.points,
                basis,
                basis_labels: dp.basis.iter().map(|f| f.to_string()).collect(),
            })
        }
        Variety::CompleteIntersection { forms } => {
            let forms = forms
                .iter()
                .map(|f| Form::from_json(&field, f))
                .collect::<Result<Vec<_>>>()?;
            let ps = complete_intersection_points(&field, &forms)?;
            Ok(Construction::with_monomials(ps, h))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_json_round_trip() {
        let d = Descriptor::from_json(r#"{"q":4,"family":"hermitian","m":3,"r":2}"#).unwrap();
        assert_eq!(d, Descriptor::new(4, Variety::Hermitian { m: 3, r: 2 }));
        let back: Descriptor = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);

        let p = Descriptor::from_json(r#"{"q":2,"family":"projective_space","m":2}"#).unwrap();
        assert_eq!(p.variety, Variety::ProjectiveSpace { m: 2, affine: false });
        let pp = Descriptor::from_json(r#"{"q":3,"family":"p1xp1","alpha":1,"beta":1}"#).unwrap();
        assert_eq!(pp.variety, Variety::ProductP1xP1 { alpha: 1, beta: 1 });
        assert!(Descriptor::from_json(r#"{"q":3,"family":"nope"}"#).is_err());
    }

    #[test]
    fn construct_counts() {
        let cases = [
            (r#"{"q":2,"family":"projective_space","m":2}"#, 7, 3),
            (r#"{"q":2,"family":"projective_space","m":2,"affine":true}"#, 4, 3),
            (r#"{"q":4,"family":"hermitian","m":3,"r":2}"#, 45, 4),
            (r#"{"q":2,"family":"grassmann","l":2,"m":4}"#, 35, 6),
            (r#"{"q":2,"family":"flag","m":3}"#, 21, 9),
            (r#"{"q":3,"family":"p1xp1","alpha":1,"beta":1}"#, 16, 4),
            (r#"{"q":2,"family":"quadric","m":3,"w":0}"#, 5, 4),
        ];
        for (json, n, b) in cases {
            let c = construct(&Descriptor::from_json(json).unwrap(), 1).unwrap();
            assert_eq!(c.points.len(), n, "{json}");
            assert_eq!(c.basis.len(), b, "{json}");
            assert_eq!(c.basis_labels.len(), b);
        }
    }

    #[test]
    fn fixed_function_space_rejects_h() {
        let d = Descriptor::from_json(r#"{"q":3,"family":"p1xp1","alpha":1,"beta":1}"#).unwrap();
        assert!(matches!(construct(&d, 2), Err(Error::InvalidParams(_))));
    }
}
