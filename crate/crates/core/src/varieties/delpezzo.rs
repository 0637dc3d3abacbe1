//! Del Pezzo surfaces: P^2 blown up at l <= 6 rational points in general
//! position, embedded by the cubics through those points.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::linalg::Matrix;
use crate::projgeom::{enumerate_monomials, enumerate_projective_points, evaluation_matrix, normalize, Form, ProjPoint};

use super::{format_point, PointSet};

#[derive(Clone, Debug)]
pub struct DelPezzo {
    /// Evaluation columns in P^{9-l}: non-base points of P^2, then the q + 1
    /// points of each exceptional line.
    pub points: PointSet,
    pub base_points: Vec<ProjPoint>,
    /// Cubics through the base points.
    pub basis: Vec<Form>,
}

fn det3(f: &FieldSpec, a: &[Elem], b: &[Elem], c: &[Elem]) -> Elem {
    let t = |x: Elem, y: Elem, z: Elem| f.mul(x, f.mul(y, z));
    let pos = f.add(
        f.add(t(a[0], b[1], c[2]), t(a[1], b[2], c[0])),
        t(a[2], b[0], c[1]),
    );
    let neg = f.add(
        f.add(t(a[2], b[1], c[0]), t(a[0], b[2], c[1])),
        t(a[1], b[0], c[2]),
    );
    f.sub(pos, neg)
}

fn on_common_conic(field: &Field, pts: &[&ProjPoint]) -> bool {
    let conics: Vec<Form> = enumerate_monomials(2, 2).into_iter().map(Form::monomial).collect();
    let coords: Vec<Vec<Elem>> = pts.iter().map(|p| p.coords().to_vec()).collect();
    let m = evaluation_matrix(field, &conics, &coords).expect("three coordinates");
    m.rank() < 6
}

/// The lexicographically first l points of P^2 (in enumeration order) with no
/// three collinear and, for l = 6, not all on a conic.
pub fn general_position_points(l: usize, field: &Field) -> Result<Vec<ProjPoint>> {
    if l > 6 {
        return Err(Error::InvalidParams(format!("Del Pezzo surfaces need l <= 6, got {l}")));
    }
    let all = enumerate_projective_points(2, field, false);
    let mut chosen: Vec<usize> = Vec::with_capacity(l);

    fn admissible(field: &Field, all: &[ProjPoint], chosen: &[usize], c: usize) -> bool {
        let p = all[c].coords();
        for (i, &a) in chosen.iter().enumerate() {
            for &b in &chosen[i + 1..] {
                if det3(field, all[a].coords(), all[b].coords(), p).is_zero() {
                    return false;
                }
            }
        }
        if chosen.len() == 5 {
            let mut six: Vec<&ProjPoint> = chosen.iter().map(|&i| &all[i]).collect();
            six.push(&all[c]);
            return !on_common_conic(field, &six);
        }
        true
    }

    fn search(field: &Field, all: &[ProjPoint], chosen: &mut Vec<usize>, l: usize) -> bool {
        if chosen.len() == l {
            return true;
        }
        let start = chosen.last().map_or(0, |&i| i + 1);
        for c in start..all.len() {
            if admissible(field, all, chosen, c) {
                chosen.push(c);
                if search(field, all, chosen, l) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    if !search(field, &all, &mut chosen, l) {
        return Err(Error::GeneralPositionFailure {
            wanted: l,
            q: field.q(),
        });
    }
    Ok(chosen.into_iter().map(|i| all[i].clone()).collect())
}

/// Builds the evaluation columns of the Del Pezzo surface X_l.
pub fn delpezzo_points(l: usize, field: &Field) -> Result<DelPezzo> {
    let base = general_position_points(l, field)?;
    let monos = enumerate_monomials(2, 3);
    let conditions = Matrix::from_rows(
        field.clone(),
        monos.len(),
        base.iter()
            .map(|p| {
                monos
                    .iter()
                    .map(|e| Form::monomial(e.clone()).evaluate(field, p.coords()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?,
    )?;
    let (_, kernel) = conditions.rank_and_kernel();
    let basis: Vec<Form> = (0..kernel.rows())
        .map(|i| {
            Form::from_terms(
                field,
                3,
                3,
                monos.iter().cloned().zip(kernel.row(i).iter().copied()),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let k = basis.len();
    if k != 10 - l {
        return Err(Error::Invariant(format!("expected {} cubics, found {k}", 10 - l)));
    }

    let mut ps = PointSet::new(field.clone(), k);
    for p in enumerate_projective_points(2, field, false) {
        if base.contains(&p) {
            continue;
        }
        let col = basis
            .iter()
            .map(|f| f.evaluate(field, p.coords()))
            .collect::<Result<Vec<_>>>()?;
        let col = normalize(field, &col)
            .ok_or_else(|| Error::Invariant(format!("all cubics vanish at {}", format_point(p.coords()))))?;
        ps.push_labeled(col, format_point(p.coords()));
    }
    for (i, p) in base.iter().enumerate() {
        let pivot = p.pivot();
        let local: Vec<usize> = (0..3).filter(|&c| c != pivot).collect();
        let grads: Vec<Vec<Elem>> = basis
            .iter()
            .map(|f| {
                local
                    .iter()
                    .map(|&c| f.derivative(field, c).evaluate(field, p.coords()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for v in enumerate_projective_points(1, field, false) {
            let col: Vec<Elem> = grads.iter().map(|g| field.dot(g, v.coords())).collect();
            let col = normalize(field, &col).ok_or_else(|| {
                Error::Invariant(format!("degenerate exceptional direction at base point {i}"))
            })?;
            ps.push_labeled(col, format!("E{i}{}", format_point(v.coords())));
        }
    }
    Ok(DelPezzo {
        points: ps,
        base_points: base,
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;
    use std::collections::BTreeSet;

    #[test]
    fn counts_and_basis_sizes() {
        let f5 = field_of_order(5).unwrap();
        for l in 0..=5usize {
            let dp = delpezzo_points(l, &f5).unwrap();
            assert_eq!(dp.points.len(), 31 + 5 * l);
            assert_eq!(dp.basis.len(), 10 - l);
        }
        let f7 = field_of_order(7).unwrap();
        let dp = delpezzo_points(1, &f7).unwrap();
        assert_eq!((dp.points.len(), dp.basis.len()), (64, 9));
        let dp = delpezzo_points(6, &f7).unwrap();
        assert_eq!((dp.points.len(), dp.basis.len()), (99, 4));
    }

    #[test]
    fn veronese_when_no_base_points() {
        let f5 = field_of_order(5).unwrap();
        let dp = delpezzo_points(0, &f5).unwrap();
        let monos: BTreeSet<String> = enumerate_monomials(2, 3)
            .into_iter()
            .map(|e| Form::monomial(e).to_string())
            .collect();
        let got: BTreeSet<String> = dp.basis.iter().map(|f| f.to_string()).collect();
        assert_eq!(got, monos);
    }

    #[test]
    fn base_points_are_in_general_position() {
        for q in [5u64, 7, 8] {
            let f = field_of_order(q).unwrap();
            let max_l = if q == 5 { 5 } else { 6 };
            let pts = general_position_points(max_l, &f).unwrap();
            for (a, b, c) in itertools::Itertools::tuple_combinations(pts.iter()) {
                assert!(!det3(&f, a.coords(), b.coords(), c.coords()).is_zero());
            }
            for dp_basis in delpezzo_points(max_l, &f).unwrap().basis {
                for p in &pts {
                    assert!(dp_basis.evaluate(&f, p.coords()).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn six_points_over_gf5_always_lie_on_a_conic() {
        // every 6-arc of PG(2,5) is a conic, so the search must be exhaustive and fail
        let f5 = field_of_order(5).unwrap();
        assert!(matches!(
            general_position_points(6, &f5),
            Err(Error::GeneralPositionFailure { wanted: 6, q: 5 })
        ));
        // over GF(4) a hyperoval is a 6-arc off every conic
        let f4 = field_of_order(4).unwrap();
        assert_eq!(general_position_points(6, &f4).unwrap().len(), 6);
    }

    #[test]
    fn columns_are_pairwise_non_proportional() {
        let f5 = field_of_order(5).unwrap();
        for l in [1usize, 3, 5] {
            let dp = delpezzo_points(l, &f5).unwrap();
            let distinct: BTreeSet<&Vec<Elem>> = dp.points.points().iter().collect();
            assert_eq!(distinct.len(), dp.points.len());
        }
    }
}
