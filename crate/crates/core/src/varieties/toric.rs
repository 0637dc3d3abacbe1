//! Torus points with Laurent monomial bases, and P^1 x P^1.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::projgeom::{enumerate_projective_points, increment, Form};

use super::{format_point, Construction, PointSet};

/// The (q-1)^s points of the torus with the monomials `t^u`, u in `lattice`.
///
/// Points are stored as `(1, t_1, ..., t_s)` and each monomial is homogenized
/// with `x_0`, so the values are exactly `t^u`. Exponents are reduced mod q-1.
pub fn toric_points(s: usize, lattice: &[Vec<i64>], field: &Field) -> Result<Construction> {
    if lattice.is_empty() {
        return Err(Error::EmptyPolytope);
    }
    if s == 0 {
        return Err(Error::InvalidParams("toric codes need s >= 1".into()));
    }
    if let Some(u) = lattice.iter().find(|u| u.len() != s) {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: u.len(),
        });
    }
    let period = field.q() as i64 - 1;
    let reduced: Vec<Vec<u32>> = lattice
        .iter()
        .map(|u| u.iter().map(|&a| a.rem_euclid(period) as u32).collect())
        .collect();
    let top = reduced.iter().map(|u| u.iter().sum::<u32>()).max().unwrap_or(0);

    let mut basis = Vec::with_capacity(reduced.len());
    let mut labels = Vec::with_capacity(reduced.len());
    for (u, orig) in reduced.iter().zip(lattice) {
        let mut e = Vec::with_capacity(s + 1);
        e.push(top - u.iter().sum::<u32>());
        e.extend_from_slice(u);
        basis.push(Form::monomial(e));
        let parts: Vec<String> = orig.iter().map(|a| a.to_string()).collect();
        labels.push(format!("t^({})", parts.join(",")));
    }

    let mut ps = PointSet::new(field.clone(), s + 1);
    let mut digits = vec![0u32; s];
    loop {
        let mut coords = Vec::with_capacity(s + 1);
        coords.push(Elem::ONE);
        coords.extend(digits.iter().map(|&d| Elem(d + 1)));
        ps.push(coords);
        if !increment(&mut digits, field.q() - 1) {
            break;
        }
    }
    Ok(Construction {
        points: ps,
        basis,
        basis_labels: labels,
    })
}

/// All (q+1)^2 points of P^1 x P^1 as `(x_0, x_1, y_0, y_1)`.
pub fn product_p1p1_points(field: &Field) -> PointSet {
    let line = enumerate_projective_points(1, field, false);
    let mut ps = PointSet::new(field.clone(), 4);
    for x in &line {
        for y in &line {
            let mut c = x.coords().to_vec();
            c.extend_from_slice(y.coords());
            ps.push_labeled(c, format!("{}x{}", format_point(x.coords()), format_point(y.coords())));
        }
    }
    ps
}

/// Bihomogeneous monomials `x_0^{a-i} x_1^i y_0^{b-j} y_1^j`.
pub fn product_p1p1_basis(alpha: u32, beta: u32) -> (Vec<Form>, Vec<String>) {
    let mut basis = Vec::new();
    for i in 0..=alpha {
        for j in 0..=beta {
            basis.push(Form::monomial(vec![alpha - i, i, beta - j, j]));
        }
    }
    let labels = basis.iter().map(|f| f.to_string()).collect();
    (basis, labels)
}
