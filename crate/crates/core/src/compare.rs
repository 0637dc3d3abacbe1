//! Measured parameters side by side with predictions and bounds.

use serde::{Deserialize, Serialize};

use crate::bounds::counts::grassmann_degree;
use crate::bounds::{
    all_subsets_span, anchor, cayley_bacharach_bound, covering_family_bound, elementary_bound, griesmer_max_d,
    hermitian_ch_bound, lachaud_section_bounds, singleton, sorensen_bound,
};
use crate::codes::{build_from_descriptor, min_distance, LinearCode, Search};
use crate::predict::{predict, PredictedD};
use crate::projgeom::{binomial, Form};
use crate::varieties::{classify_quadric, Descriptor, Variety};

/// Largest number of (m+1)-subsets checked before giving up on the
/// spanning hypothesis.
const SPAN_CHECK_LIMIT: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub name: String,
    pub d: i64,
    pub anchor: String,
}

impl LowerBound {
    fn new(name: &str, d: i64, anchor: &str) -> LowerBound {
        LowerBound {
            name: name.into(),
            d,
            anchor: anchor.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub label: String,
    pub family: String,
    pub h: u32,
    pub n: Option<u64>,
    pub k: Option<u64>,
    pub measured_d: Option<u64>,
    pub predicted_d: Option<PredictedD>,
    pub prediction_holds: Option<bool>,
    pub griesmer_max_d: Option<u64>,
    pub singleton: Option<i64>,
    pub griesmer_attained: Option<bool>,
    pub lower_bounds: Vec<LowerBound>,
    pub error: Option<String>,
}

impl ComparisonRow {
    fn failed(desc: &Descriptor, h: u32, err: String) -> ComparisonRow {
        ComparisonRow {
            label: desc.label(),
            family: desc.variety.family_name().into(),
            h,
            n: None,
            k: None,
            measured_d: None,
            predicted_d: None,
            prediction_holds: None,
            griesmer_max_d: None,
            singleton: None,
            griesmer_attained: None,
            lower_bounds: Vec::new(),
            error: Some(err),
        }
    }

    /// Every lower bound is at most d and d is at most the Griesmer and
    /// Singleton limits.
    pub fn bounds_consistent(&self) -> Option<bool> {
        let d = self.measured_d? as i64;
        let upper = self.griesmer_max_d? as i64;
        Some(self.lower_bounds.iter().all(|b| b.d <= d) && d <= upper && upper <= self.singleton?)
    }
}

/// (dimension, degree) of the variety carrying the point set, when known.
fn dimension_and_degree(desc: &Descriptor) -> Option<(u32, u64)> {
    match &desc.variety {
        Variety::ProjectiveSpace { m, .. } => Some((*m as u32, 1)),
        Variety::Quadric { m, .. } => Some(((*m as u32).checked_sub(1)?, 2)),
        Variety::QuadricForm { form } => Some(((form.nvars as u32).checked_sub(2)?, 2)),
        Variety::Hermitian { m, r } => Some(((*m as u32).checked_sub(1)?, *r as u64 + 1)),
        Variety::Grassmann { l, m } => {
            let (l, m) = (*l as u32, *m as u32);
            Some((l * (m - l), grassmann_degree(l, m)))
        }
        Variety::Flag { m } => {
            let m = *m as u64;
            Some((2 * m as u32 - 3, binomial(2 * m - 2, m - 1)))
        }
        Variety::DelPezzo { l } => Some((2, 9 - *l as u64)),
        Variety::ProductP1xP1 { alpha, beta } => Some((2, 2 * *alpha as u64 * *beta as u64)),
        _ => None,
    }
}

fn full_rank_quadric(desc: &Descriptor) -> bool {
    match &desc.variety {
        Variety::Quadric { .. } => true,
        Variety::QuadricForm { form } => desc
            .field()
            .and_then(|f| {
                let form = Form::from_json(&f, form)?;
                classify_quadric(&f, &form).map(|c| c.rank == form.nvars())
            })
            .unwrap_or(false),
        _ => false,
    }
}

/// Lower bounds on d that apply to `code` built from `desc` at degree `h`.
pub fn applicable_lower_bounds(desc: &Descriptor, h: u32, code: &LinearCode) -> Vec<LowerBound> {
    let q = desc.q;
    let n = code.n() as u64;
    let mut out = Vec::new();

    if let Some((delta, s)) = dimension_and_degree(desc).filter(|&(_, s)| s >= 1) {
        let s_h = (h as u64).checked_pow(delta).and_then(|p| p.checked_mul(s));
        if let Some(Ok(d)) = s_h.filter(|_| delta >= 1).map(|s| elementary_bound(n, s, delta, q)) {
            out.push(LowerBound::new("elementary", d, anchor::ELEMENTARY));
        }
    }

    if let Variety::ProductP1xP1 { alpha, beta } = &desc.variety {
        if let Ok(d) = covering_family_bound(n, q + 1, q + 1, *beta as u64, *alpha as u64) {
            out.push(LowerBound::new("covering", d, anchor::COVERING));
        }
    }

    let ci_degrees = match &desc.variety {
        Variety::ProjectiveSpace { m, affine: true } => Some(vec![q; *m]),
        Variety::CompleteIntersection { forms } => {
            let nvars = forms.first().map_or(0, |f| f.nvars);
            let degrees: Vec<u64> = forms.iter().map(|f| f.degree as u64).collect();
            (forms.len() + 1 == nvars && degrees.iter().product::<u64>() == n).then_some(degrees)
        }
        _ => None,
    };
    if let Some(degrees) = ci_degrees {
        if let Ok(cb) = cayley_bacharach_bound(&degrees, h as u64) {
            out.push(LowerBound::new("cayley_bacharach", cb.d_lower, anchor::CAYLEY_BACHARACH));
            let dim = degrees.len() as u64 + 1;
            if binomial(n, dim) <= SPAN_CHECK_LIMIT {
                if let Ok(c) = crate::varieties::construct(desc, h) {
                    if all_subsets_span(code.field(), c.points.points()) {
                        out.push(LowerBound::new("ballico_fontanari", cb.ballico_fontanari, anchor::BALLICO_FONTANARI));
                    }
                }
            }
        }
    }

    let hypersurface = match &desc.variety {
        Variety::Hermitian { m, r } => Some((*m as u32, *r as u64 + 1)),
        Variety::Quadric { m, .. } => Some((*m as u32, 2)),
        Variety::QuadricForm { form } => Some((form.nvars.saturating_sub(1) as u32, 2)),
        _ => None,
    };
    if let Some((m, s)) = hypersurface {
        let smooth = matches!(desc.variety, Variety::Hermitian { .. }) || full_rank_quadric(desc);
        if h == 1 && m >= 3 && smooth {
            if let Ok(b) = lachaud_section_bounds(q, m, s, n, Some(n)) {
                out.push(LowerBound::new("lachaud_sections", b.d_lower, anchor::LACHAUD_SECTIONS));
            }
        }
    }

    if let Variety::Hermitian { m: 3, r } = &desc.variety {
        let r = *r as u64;
        if h == 1 {
            out.push(LowerBound::new("sorensen", sorensen_bound(n, 1, r), anchor::SORENSEN));
        }
        if let Ok(d) = hermitian_ch_bound(n, h as u64, r) {
            out.push(LowerBound::new("hermitian_ch", d, anchor::HERMITIAN_CH));
        }
    }
    out
}

/// Builds, measures and bounds one code.
pub fn compare_one(desc: &Descriptor, h: u32, search: &Search) -> ComparisonRow {
    let code = match build_from_descriptor(desc, h) {
        Ok(c) => c,
        Err(e) => return ComparisonRow::failed(desc, h, e.to_string()),
    };
    let (n, k) = (code.n() as u64, code.k() as u64);
    let mut row = ComparisonRow::failed(desc, h, String::new());
    row.error = None;
    row.n = Some(n);
    row.k = Some(k);
    row.predicted_d = predict(desc, h).ok().and_then(|p| p.d);
    row.griesmer_max_d = Some(griesmer_max_d(n, k as u32, code.q()));
    row.singleton = Some(singleton(n, k));
    row.lower_bounds = applicable_lower_bounds(desc, h, &code);
    match min_distance(&code, search) {
        Ok(d) => {
            row.measured_d = Some(d);
            row.prediction_holds = row.predicted_d.as_ref().map(|p| p.admits(d));
            row.griesmer_attained = row.griesmer_max_d.map(|g| g == d);
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// One row per entry; failures are recorded in the row and the run continues.
pub fn compare(entries: &[(Descriptor, u32)], search: &Search) -> Vec<ComparisonRow> {
    entries.iter().map(|(d, h)| compare_one(d, *h, search)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_BUDGET;

    fn row(json: &str, h: u32) -> ComparisonRow {
        compare_one(&Descriptor::from_json(json).unwrap(), h, &Search::new(DEFAULT_BUDGET, 4))
    }

    #[test]
    fn quadrics_over_gf8() {
        let hyp = row(r#"{"q":8,"family":"quadric","m":3,"w":2}"#, 1);
        assert_eq!((hyp.n, hyp.k, hyp.measured_d), (Some(81), Some(4), Some(64)));
        assert_eq!(hyp.griesmer_max_d, Some(69));
        assert_eq!(hyp.griesmer_attained, Some(false));
        let ell = row(r#"{"q":8,"family":"quadric","m":3,"w":0}"#, 1);
        assert_eq!((ell.n, ell.measured_d, ell.griesmer_max_d), (Some(65), Some(56), Some(56)));
        assert_eq!(ell.griesmer_attained, Some(true));
        assert_eq!(ell.bounds_consistent(), Some(true));
    }

    #[test]
    fn grassmann_attains_griesmer() {
        let r = row(r#"{"q":2,"family":"grassmann","l":2,"m":4}"#, 1);
        assert_eq!(r.measured_d, Some(16));
        assert_eq!(r.griesmer_attained, Some(true));
        assert_eq!(r.prediction_holds, Some(true));
        assert!(r.lower_bounds.iter().any(|b| b.name == "elementary"));
    }

    #[test]
    fn hermitian_surface_bounds() {
        let r = row(r#"{"q":4,"family":"hermitian","m":3,"r":2}"#, 1);
        let get = |name: &str| r.lower_bounds.iter().find(|b| b.name == name).unwrap().d;
        assert_eq!(get("elementary"), 30);
        assert_eq!(get("sorensen"), 32);
        assert_eq!(get("hermitian_ch"), 30);
        assert!(get("lachaud_sections") >= 24);
        assert_eq!(r.bounds_consistent(), Some(true));
    }

    #[test]
    fn covering_bound_is_tight_on_p1xp1() {
        let r = row(r#"{"q":3,"family":"p1xp1","alpha":1,"beta":1}"#, 1);
        let cov = r.lower_bounds.iter().find(|b| b.name == "covering").unwrap();
        assert_eq!((cov.d, r.measured_d), (9, Some(9)));
    }

    #[test]
    fn affine_plane_uses_cayley_bacharach() {
        let r = row(r#"{"q":3,"family":"projective_space","m":2,"affine":true}"#, 2);
        let cb = r.lower_bounds.iter().find(|b| b.name == "cayley_bacharach").unwrap();
        assert_eq!(cb.d, 3);
        assert_eq!(r.measured_d, Some(3));
        assert!(r.lower_bounds.iter().all(|b| b.name != "ballico_fontanari"));
    }

    #[test]
    fn failures_stay_in_their_row() {
        let entries = [
            (Descriptor::from_json(r#"{"q":6,"family":"projective_space","m":1}"#).unwrap(), 1),
            (Descriptor::from_json(r#"{"q":2,"family":"projective_space","m":2}"#).unwrap(), 1),
        ];
        let rows = compare(&entries, &Search::default());
        assert!(rows[0].error.is_some() && rows[0].n.is_none());
        assert_eq!(rows[1].measured_d, Some(4));
        let tight = compare(&entries[1..], &Search::new(3, 1));
        assert_eq!(tight[0].n, Some(7));
        assert!(tight[0].measured_d.is_none() && tight[0].error.is_some());
    }
}
