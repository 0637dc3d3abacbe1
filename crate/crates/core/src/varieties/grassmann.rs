//! Grassmannians in the Plücker embedding, Schubert subvarieties, and
//! point-hyperplane flag varieties.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::linalg::Matrix;
use crate::projgeom::{enumerate_projective_points, increment, normalize};

use super::{format_point, PointSet};

/// Every l-dimensional subspace of F_q^m as its reduced row echelon basis,
/// grouped by pivot set in lexicographic order.
pub fn subspaces_rref(l: usize, m: usize, field: &Field) -> Vec<Matrix> {
    let q = field.q();
    let mut out = Vec::new();
    for pivots in (0..m).combinations(l) {
        // free slots: row i, column c > pivots[i] that is not a pivot column
        let slots: Vec<(usize, usize)> = (0..l)
            .flat_map(|i| {
                let pivots = &pivots;
                (pivots[i] + 1..m)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut digits = vec![0u32; slots.len()];
        loop {
            let mut w = Matrix::zeros(field.clone(), l, m);
            for (i, &p) in pivots.iter().enumerate() {
                w.set(i, p, Elem::ONE);
            }
            for (&(i, c), &d) in slots.iter().zip(&digits) {
                w.set(i, c, Elem(d));
            }
            out.push(w);
            if !increment(&mut digits, q) {
                break;
            }
        }
    }
    out
}

fn plucker(field: &FieldSpec, w: &Matrix) -> Vec<Elem> {
    let minors = w.maximal_minors().expect("l <= m");
    normalize(field, &minors).expect("independent rows have a nonzero minor")
}

fn check_lm(l: usize, m: usize) -> Result<()> {
    if l == 0 || l >= m {
        return Err(Error::InvalidParams(format!("Grassmannian needs 1 <= l < m, got l={l}, m={m}")));
    }
    Ok(())
}

/// Plücker vectors of all rational points of G(l, m).
pub fn grassmann_points(l: usize, m: usize, field: &Field) -> Result<PointSet> {
    check_lm(l, m)?;
    let nvars = crate::projgeom::binomial(m as u64, l as u64) as usize;
    let mut ps = PointSet::new(field.clone(), nvars);
    for w in subspaces_rref(l, m, field) {
        ps.push(plucker(field, &w));
    }
    Ok(ps)
}

/// dim(W ∩ A_j) where A_j is spanned by the first j standard basis vectors.
fn meet_with_flag(w: &Matrix, j: usize) -> usize {
    let tail: Vec<usize> = (j..w.cols()).collect();
    w.rows() - w.select_cols(&tail).rank()
}

/// Points of the Schubert variety `dim(W ∩ A_{alpha_i}) >= i`, i = 1..l.
pub fn schubert_points(l: usize, m: usize, alpha: &[usize], field: &Field) -> Result<PointSet> {
    check_lm(l, m)?;
    if alpha.len() != l {
        return Err(Error::InvalidAlpha(format!("expected {l} entries, got {}", alpha.len())));
    }
    if alpha[0] < 1 || alpha.windows(2).any(|p| p[0] > p[1]) || alpha[l - 1] > m {
        return Err(Error::InvalidAlpha(format!(
            "{alpha:?} is not a nondecreasing sequence in 1..={m}"
        )));
    }
    let nvars = crate::projgeom::binomial(m as u64, l as u64) as usize;
    let mut ps = PointSet::new(field.clone(), nvars);
    for w in subspaces_rref(l, m, field) {
        if alpha
            .iter()
            .enumerate()
            .all(|(i, &a)| meet_with_flag(&w, a) > i)
        {
            ps.push(plucker(field, &w));
        }
    }
    Ok(ps)
}

/// Segre vectors `z_ij = x_i y_j` of incident pairs (point x, hyperplane y) in
/// P^{m-1}, ordered by point and then hyperplane.
pub fn flag_points(m: usize, field: &Field) -> Result<PointSet> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("flag variety needs m >= 2, got {m}")));
    }
    let pts = enumerate_projective_points(m - 1, field, false);
    let mut ps = PointSet::new(field.clone(), m * m);
    for x in &pts {
        for y in &pts {
            if !field.dot(x.coords(), y.coords()).is_zero() {
                continue;
            }
            let z: Vec<Elem> = x
                .coords()
                .iter()
                .flat_map(|&a| y.coords().iter().map(move |&b| (a, b)))
                .map(|(a, b)| field.mul(a, b))
                .collect();
            let z = normalize(field, &z).expect("nonzero product");
            let label = format!("{}x{}", format_point(x.coords()), format_point(y.coords()));
            ps.push_labeled(z, label);
        }
    }
    Ok(ps)
}
