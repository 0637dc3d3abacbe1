//! Quadrics, Hermitian hypersurfaces and complete intersections.

use serde::{Deserialize, Serialize};

use crate::bounds::counts::{projective_count, quadric_count};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::projgeom::{enumerate_projective_points, Form};

use super::PointSet;

fn square(nvars: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[i] = 2;
    e
}

fn product(nvars: usize, i: usize, j: usize) -> Vec<u32> {
    let mut e = vec![0; nvars];
    e[i] += 1;
    e[j] += 1;
    e
}

/// Smallest `c` for which `x^2 + x + c` has no root in the field.
fn elliptic_constant(field: &FieldSpec) -> Elem {
    field
        .elements()
        .find(|&c| {
            field
                .elements()
                .all(|t| !field.add(field.add(field.mul(t, t), t), c).is_zero())
        })
        .expect("every finite field has an irreducible quadratic")
}

/// Normal form of the nondegenerate quadric in P^m with character `w`
/// (0 elliptic, 1 parabolic, 2 hyperbolic).
pub fn quadric_normal_form(m: usize, w: u8, field: &FieldSpec) -> Result<Form> {
    let ok = match w {
        1 => m % 2 == 0,
        0 | 2 => m % 2 == 1,
        _ => false,
    };
    if !ok || m == 0 {
        return Err(Error::ParityMismatch { m, w });
    }
    let n = m + 1;
    let mut terms = Vec::new();
    let first_pair = match w {
        1 => {
            terms.push((square(n, 0), Elem::ONE));
            1
        }
        2 => 0,
        _ => {
            terms.push((square(n, 0), Elem::ONE));
            terms.push((product(n, 0, 1), Elem::ONE));
            terms.push((square(n, 1), elliptic_constant(field)));
            2
        }
    };
    for i in (first_pair..n).step_by(2) {
        terms.push((product(n, i, i + 1), Elem::ONE));
    }
    Form::from_terms(field, n, 2, terms)
}

/// Rank and character of a quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricClass {
    pub rank: usize,
    pub w: u8,
    pub points: u64,
}

/// Classifies a quadratic form in `m + 1` variables.
///
/// The rank comes from the size of the vertex (points where the form and all
/// its partial derivatives vanish, a projective subspace of dimension m - rank).
/// The character is then read off by matching the point count against the
/// cone counts for that rank.
pub fn classify_quadric(field: &FieldSpec, f: &Form) -> Result<QuadricClass> {
    if f.degree() != 2 || f.is_zero() {
        return Err(Error::NotQuadratic);
    }
    let m = f.nvars() - 1;
    let q = field.q() as u64;
    let partials: Vec<Form> = (0..=m).map(|i| f.derivative(field, i)).collect();
    let mut on = 0u64;
    let mut singular = 0u64;
    for p in enumerate_projective_points(m, field, false) {
        if !f.evaluate(field, p.coords())?.is_zero() {
            continue;
        }
        on += 1;
        let mut sing = true;
        for d in &partials {
            if !d.evaluate(field, p.coords())?.is_zero() {
                sing = false;
                break;
            }
        }
        if sing {
            singular += 1;
        }
    }
    let rank = if singular == 0 {
        m + 1
    } else {
        let dim = (0..=m as u32)
            .find(|&j| projective_count(q, j) == singular)
            .ok_or_else(|| Error::Invariant(format!("vertex of size {singular} is not a subspace")))?;
        m - dim as usize
    };
    let base = rank - 1;
    let candidates: &[u8] = if base % 2 == 0 { &[1] } else { &[0, 2] };
    let matches: Vec<u8> = candidates
        .iter()
        .copied()
        .filter(|&w| quadric_count(q, m as u32, rank as u32, w).ok() == Some(on))
        .collect();
    match matches.as_slice() {
        [w] => Ok(QuadricClass {
            rank,
            w: *w,
            points: on,
        }),
        [] => Err(Error::Invariant(format!(
            "no quadric of rank {rank} in P^{m} has {on} points"
        ))),
        _ => Err(Error::AmbiguousClassification(format!(
            "rank {rank}, {on} points matches characters {matches:?}"
        ))),
    }
}

/// `x_0^{r+1} + ... + x_m^{r+1}` over GF(r^2).
pub fn hermitian_form(m: usize, r: u32, field: &FieldSpec) -> Result<Form> {
    if field.q() != r * r {
        return Err(Error::NotQuadraticExtension { q: field.q(), r });
    }
    let n = m + 1;
    Form::from_terms(
        field,
        n,
        r + 1,
        (0..n).map(|i| {
            let mut e = vec![0; n];
            e[i] = r + 1;
            (e, Elem::ONE)
        }),
    )
}

/// Rational points of `V(f)` in enumeration order.
pub fn hypersurface_points(field: &Field, f: &Form) -> Result<PointSet> {
    common_zeros(field, std::slice::from_ref(f))
}

fn common_zeros(field: &Field, forms: &[Form]) -> Result<PointSet> {
    let nvars = forms.first().map_or(0, |f| f.nvars());
    if nvars < 2 {
        return Err(Error::InvalidParams("forms need at least two variables".into()));
    }
    let mut ps = PointSet::new(field.clone(), nvars);
    'points: for p in enumerate_projective_points(nvars - 1, field, false) {
        for f in forms {
            if !f.evaluate(field, p.coords())?.is_zero() {
                continue 'points;
            }
        }
        ps.push(p.into_coords());
    }
    Ok(ps)
}

/// Common zeros of `m` forms in P^m. A note is attached when the count
/// differs from the product of the degrees.
pub fn complete_intersection_points(field: &Field, forms: &[Form]) -> Result<PointSet> {
    let first = forms.first().ok_or(Error::EmptyPointSet)?;
    let m = first.nvars() - 1;
    if forms.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: forms.len(),
        });
    }
    if let Some(f) = forms.iter().find(|f| f.nvars() != m + 1) {
        return Err(Error::DimensionMismatch {
            expected: m + 1,
            got: f.nvars(),
        });
    }
    let mut ps = common_zeros(field, forms)?;
    let expected: u64 = forms.iter().map(|f| f.degree() as u64).product();
    if ps.len() as u64 != expected {
        ps.note(format!(
            "{} common zeros but the degrees multiply to {expected}; not a reduced complete intersection",
            ps.len()
        ));
    }
    Ok(ps)
}

/// The forms `x_i^q - x_i x_0^{q-1}`, i = 1..m, whose common zeros are the
/// q^m affine points of P^m.
pub fn affine_complete_intersection(m: usize, field: &FieldSpec) -> Result<Vec<Form>> {
    let q = field.q();
    (1..=m)
        .map(|i| {
            let mut a = vec![0; m + 1];
            a[i] = q;
            let mut b = vec![0; m + 1];
            b[i] = 1;
            b[0] = q - 1;
            Form::from_terms(field, m + 1, q, [(a, Elem::ONE), (b, field.neg(Elem::ONE))])
        })
        .collect()
}
