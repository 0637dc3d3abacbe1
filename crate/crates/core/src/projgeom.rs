//! Projective spaces over GF(q): canonical points, monomials, forms.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldSpec};
use crate::linalg::Matrix;

/// A point of P^m given by its canonical representative: the first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProjPoint {
    coords: Vec<Elem>,
}

impl ProjPoint {
    /// Canonicalizes an arbitrary nonzero coordinate vector.
    pub fn new(field: &FieldSpec, coords: &[Elem]) -> Option<ProjPoint> {
        normalize(field, coords).map(|coords| ProjPoint { coords })
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Elem> {
        self.coords
    }

    /// m, for a point of P^m.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Position of the leading 1.
    pub fn pivot(&self) -> usize {
        self.coords.iter().position(|a| !a.is_zero()).unwrap()
    }
}

/// Scales `v` so that its first nonzero entry is 1; `None` for the zero vector.
pub fn normalize(field: &FieldSpec, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|a| !a.is_zero())?;
    let inv = field.inv(lead).ok()?;
    Some(v.iter().map(|&a| field.mul(a, inv)).collect())
}

/// Number of points of P^m(F_q).
pub fn projective_count(q: u64, m: u32) -> u64 {
    (0..=m).map(|i| q.pow(i)).sum()
}

/// All points of P^m(F_q): leading-1 position ascending, then the trailing
/// coordinates in lexicographic order of element indices. With `affine_only`
/// only the `x_0 = 1` block is produced.
pub fn enumerate_projective_points(m: usize, field: &FieldSpec, affine_only: bool) -> Vec<ProjPoint> {
    let q = field.q();
    let last_pivot = if affine_only { 0 } else { m };
    let mut out = Vec::new();
    for pivot in 0..=last_pivot {
        let tail = m - pivot;
        let mut digits = vec![0u32; tail];
        loop {
            let mut coords = vec![Elem::ZERO; m + 1];
            coords[pivot] = Elem::ONE;
            for (i, &d) in digits.iter().enumerate() {
                coords[pivot + 1 + i] = Elem(d);
            }
            out.push(ProjPoint { coords });
            if !increment(&mut digits, q) {
                break;
            }
        }
    }
    out
}

/// Odometer increment, last digit fastest. Returns false after wrapping.
pub fn increment(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Exponent vectors of length `m + 1` and total degree `h`, in graded
/// lexicographic order with x_0 heaviest (x_0^h first).
pub fn enumerate_monomials(m: usize, h: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == nvars {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(pos + 1, nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m + 1, h, &mut Vec::with_capacity(m + 1), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// A homogeneous polynomial in `nvars` variables, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Elem>,
}

/// JSON form: `terms` is a list of `[exponents, coefficient]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub nvars: usize,
    pub degree: u32,
    pub terms: Vec<(Vec<u32>, u32)>,
}

impl Form {
    pub fn zero(nvars: usize, degree: u32) -> Form {
        Form {
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exps: Vec<u32>) -> Form {
        let degree = exps.iter().sum();
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        terms.insert(exps, Elem::ONE);
        Form {
            nvars,
            degree,
            terms,
        }
    }

    /// The linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Elem]) -> Form {
        let n = coeffs.len();
        let mut f = Form::zero(n, 1);
        for (i, &c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                f.terms.insert(e, c);
            }
        }
        f
    }

    pub fn from_terms(
        field: &FieldSpec,
        nvars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Vec<u32>, Elem)>,
    ) -> Result<Form> {
        let mut f = Form::zero(nvars, degree);
        for (e, c) in terms {
            f.add_term(field, e, c)?;
        }
        Ok(f)
    }

    pub fn from_json(field: &FieldSpec, json: &FormJson) -> Result<Form> {
        Form::from_terms(
            field,
            json.nvars,
            json.degree,
            json.terms.iter().map(|(e, c)| (e.clone(), Elem(*c))),
        )
    }

    pub fn to_json(&self) -> FormJson {
        FormJson {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.0)).collect(),
        }
    }

    /// Adds `c * x^exps`, merging with an existing term.
    pub fn add_term(&mut self, field: &FieldSpec, exps: Vec<u32>, c: Elem) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: exps.len(),
            });
        }
        if exps.iter().sum::<u32>() != self.degree {
            return Err(Error::InvalidParams(format!(
                "monomial {exps:?} does not have degree {}",
                self.degree
            )));
        }
        if !field.contains(c) {
            return Err(Error::InvalidParams(format!("coefficient {c} not in GF({})", field.q())));
        }
        let sum = field.add(self.terms.get(&exps).copied().unwrap_or(Elem::ZERO), c);
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
        Ok(())
    }

    pub fn add(&self, field: &FieldSpec, other: &Form) -> Result<Form> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(field, e.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, field: &FieldSpec, c: Elem) -> Form {
        let mut out = Form::zero(self.nvars, self.degree);
        if !c.is_zero() {
            for (e, &a) in &self.terms {
                out.terms.insert(e.clone(), field.mul(a, c));
            }
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], Elem)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Elem {
        self.terms.get(exps).copied().unwrap_or(Elem::ZERO)
    }

    pub fn evaluate(&self, field: &FieldSpec, point: &[Elem]) -> Result<Elem> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        Ok(self.terms.iter().fold(Elem::ZERO, |acc, (e, &c)| {
            let mono = e
                .iter()
                .zip(point)
                .fold(Elem::ONE, |m, (&k, &x)| field.mul(m, field.pow(x, k as u64)));
            field.add(acc, field.mul(c, mono))
        }))
    }

    /// Formal partial derivative with respect to `x_var`.
    pub fn derivative(&self, field: &FieldSpec, var: usize) -> Form {
        let mut out = Form::zero(self.nvars, self.degree.saturating_sub(1));
        for (e, &c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let factor = field.from_int(e[var] as i64);
            let coeff = field.mul(c, factor);
            if coeff.is_zero() {
                continue;
            }
            let mut de = e.clone();
            de[var] -= 1;
            out.add_term(field, de, coeff).expect("degree drops by one");
        }
        out
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomial first
        let parts = self.terms.iter().rev().map(|(e, c)| {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .join("*");
            match (c.0, mono.is_empty()) {
                (_, true) => format!("{c}"),
                (1, false) => mono,
                _ => format!("{c}*{mono}"),
            }
        });
        write!(f, "{}", parts.collect::<Vec<_>>().join(" + "))
    }
}

pub fn evaluate_form(field: &FieldSpec, f: &Form, point: &[Elem]) -> Result<Elem> {
    f.evaluate(field, point)
}

/// One canonical linear form per hyperplane of P^m(F_q).
pub fn enumerate_hyperplanes(m: usize, field: &FieldSpec) -> Vec<Form> {
    enumerate_projective_points(m, field, false)
        .iter()
        .map(|p| Form::linear(p.coords()))
        .collect()
}

/// Matrix of values `f_i(P_j)` (basis forms by rows, points by columns).
pub fn evaluation_matrix(
    field: &std::sync::Arc<FieldSpec>,
    basis: &[Form],
    points: &[Vec<Elem>],
) -> Result<Matrix> {
    let nvars = points.first().map_or(0, |p| p.len());
    if let Some(f) = basis.iter().find(|f| f.nvars() != nvars) {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            got: f.nvars(),
        });
    }
    let max_deg = basis.iter().map(|f| f.degree()).max().unwrap_or(0) as usize;
    let mut m = Matrix::zeros(field.clone(), basis.len(), points.len());
    let mut powers = vec![vec![Elem::ONE; max_deg + 1]; nvars];
    for (j, p) in points.iter().enumerate() {
        if p.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: p.len(),
            });
        }
        for (v, &x) in p.iter().enumerate() {
            for k in 1..=max_deg {
                powers[v][k] = field.mul(powers[v][k - 1], x);
            }
        }
        for (i, f) in basis.iter().enumerate() {
            let val = f.terms().fold(Elem::ZERO, |acc, (e, c)| {
                let mono = e
                    .iter()
                    .enumerate()
                    .fold(c, |acc, (v, &k)| field.mul(acc, powers[v][k as usize]));
                field.add(acc, mono)
            });
            m.set(i, j, val);
        }
    }
    Ok(m)
}
