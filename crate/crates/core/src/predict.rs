//! Closed-form code parameters per family.

use serde::{Deserialize, Serialize};

use crate::bounds::counts::{
    flag_count, gaussian_binomial, grassmann_min_weight_count, hermitian_count, nondegenerate_quadric_count,
    projective_count,
};
use crate::bounds::hermitian_ch_bound;
use crate::error::{Error, Result};
use crate::projgeom::{binomial, Form};
use crate::varieties::{classify_quadric, Descriptor, Variety};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DStatus {
    Exact,
    LowerBound,
    /// d is one of the listed values.
    Dichotomy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedD {
    pub status: DStatus,
    pub values: Vec<i64>,
}

impl PredictedD {
    fn exact(d: u64) -> PredictedD {
        PredictedD {
            status: DStatus::Exact,
            values: vec![d as i64],
        }
    }

    /// Whether a measured distance is consistent with the prediction.
    pub fn admits(&self, d: u64) -> bool {
        let d = d as i64;
        match self.status {
            DStatus::Exact | DStatus::Dichotomy => self.values.contains(&d),
            DStatus::LowerBound => self.values.iter().all(|&v| d >= v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub n: u64,
    pub k: u64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub k_is_upper_bound: bool,
    pub d: Option<PredictedD>,
    /// Nonzero weights, when the family is known to have few weights.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_weight_count: Option<u64>,
    pub anchor: String,
}

impl Prediction {
    fn exact(n: u64, k: u64, d: u64, anchor: &str) -> Prediction {
        Prediction {
            n,
            k,
            k_is_upper_bound: false,
            d: Some(PredictedD::exact(d)),
            weights: None,
            min_weight_count: None,
            anchor: anchor.to_string(),
        }
    }
}

fn refuse(why: impl Into<String>) -> Error {
    Error::OutOfTheoremRange(why.into())
}

fn require_h1(family: &str, h: u32) -> Result<()> {
    if h != 1 {
        return Err(refuse(format!("{family} parameters are known only for h = 1")));
    }
    Ok(())
}

fn quadric_d(q: u64, m: u32, w: u8) -> u64 {
    match w {
        2 => q.pow(m - 1),
        1 => q.pow(m - 1) - q.pow((m - 2) / 2),
        _ => q.pow(m - 1) - q.pow((m - 1) / 2),
    }
}

fn quadric_prediction(q: u64, m: usize, w: u8, h: u32) -> Result<Prediction> {
    crate::varieties::quadric_normal_form(m, w, &*crate::gf::field_of_order(q)?)?;
    let m32 = m as u32;
    let n = nondegenerate_quadric_count(q, m32, w)?;
    if h == 1 {
        if m < 2 {
            return Err(refuse("quadric codes need m >= 2"));
        }
        return Ok(Prediction::exact(n, m as u64 + 1, quadric_d(q, m32, w), "nondegenerate quadric codes"));
    }
    let mh = m as u64 + h as u64;
    Ok(Prediction {
        n,
        k: binomial(mh, h as u64) - binomial(mh - 2, h as u64 - 2),
        k_is_upper_bound: true,
        d: None,
        weights: None,
        min_weight_count: None,
        anchor: "forms of degree h modulo the quadric".into(),
    })
}

/// Expected parameters of `C_h(X; S)`.
pub fn predict(desc: &Descriptor, h: u32) -> Result<Prediction> {
    let q = desc.q;
    desc.field()?;
    if h == 0 {
        return Err(Error::InvalidParams("h must be at least 1".into()));
    }
    match &desc.variety {
        Variety::ProjectiveSpace { m, affine } => {
            if *affine {
                return Err(refuse("affine Reed-Muller parameters are not covered"));
            }
            if h as u64 > q {
                return Err(refuse(format!("h = {h} exceeds q = {q}; evaluation is no longer injective")));
            }
            let m = *m as u32;
            Ok(Prediction::exact(
                projective_count(q, m),
                binomial(m as u64 + h as u64, h as u64),
                (q + 1 - h as u64) * q.pow(m - 1),
                "projective Reed-Muller codes, h <= q",
            ))
        }
        Variety::Quadric { m, w } => quadric_prediction(q, *m, *w, h),
        Variety::QuadricForm { form } => {
            let field = desc.field()?;
            let f = Form::from_json(&field, form)?;
            let class = classify_quadric(&field, &f)?;
            let m = f.nvars() - 1;
            if class.rank != m + 1 {
                return Err(refuse(format!("degenerate quadric of rank {}", class.rank)));
            }
            quadric_prediction(q, m, class.w, h)
        }
        Variety::Hermitian { m, r } => {
            let r = *r as u64;
            if r * r != q {
                return Err(Error::NotQuadraticExtension { q: q as u32, r: r as u32 });
            }
            if *m < 2 {
                return Err(refuse("Hermitian codes need m >= 2"));
            }
            let m32 = *m as u32;
            let n = hermitian_count(r, m32)?;
            if h == 1 {
                let top = r.pow(2 * m32 - 1);
                let other = if m % 2 == 0 { top - r.pow(m32 - 1) } else { top + r.pow(m32 - 1) };
                let d = top.min(other);
                let mut p = Prediction::exact(n, *m as u64 + 1, d, "Hermitian hypersurface codes");
                let mut w = vec![top, other];
                w.sort_unstable();
                p.weights = Some(w);
                return Ok(p);
            }
            if *m == 3 {
                let d = hermitian_ch_bound(n, h as u64, r)?;
                return Ok(Prediction {
                    n,
                    k: binomial(3 + h as u64, h as u64),
                    k_is_upper_bound: false,
                    d: Some(PredictedD {
                        status: DStatus::LowerBound,
                        values: vec![d],
                    }),
                    weights: None,
                    min_weight_count: None,
                    anchor: crate::bounds::anchor::HERMITIAN_CH.into(),
                });
            }
            Err(refuse("Hermitian C_h codes with h > 1 are covered only for surfaces"))
        }
        Variety::Grassmann { l, m } => {
            require_h1("Grassmann", h)?;
            let (l, m) = (*l as u32, *m as u32);
            if l == 0 || l >= m {
                return Err(Error::InvalidParams(format!("Grassmannian needs 1 <= l < m, got l={l}, m={m}")));
            }
            let mut p = Prediction::exact(
                gaussian_binomial(q, m, l),
                binomial(m as u64, l as u64),
                q.pow(l * (m - l)),
                "Grassmann codes (Nogin)",
            );
            p.min_weight_count = Some(grassmann_min_weight_count(q, l, m));
            Ok(p)
        }
        Variety::Flag { m } => {
            require_h1("flag variety", h)?;
            let m = *m as u32;
            if m < 2 {
                return Err(Error::InvalidParams("flag variety needs m >= 2".into()));
            }
            Ok(Prediction::exact(
                flag_count(q, m),
                (m * m - 1) as u64,
                q.pow(2 * m - 3) - q.pow(m - 2),
                "point-hyperplane flag codes (Rodier)",
            ))
        }
        Variety::DelPezzo { l } => {
            require_h1("Del Pezzo", h)?;
            if q <= 4 {
                return Err(refuse(format!("Del Pezzo parameters need q > 4, got q = {q}")));
            }
            let n = q * q + q + 1 + *l as u64 * q;
            let k = 10 - *l as u64;
            let q2 = (q * q) as i64;
            let qi = q as i64;
            let (status, values) = match l {
                // three concurrent lines, then a singular point on E1, then a
                // 5-cycle; from l = 3 on, a (9 - l)-cycle of lines
                0 | 1 => (DStatus::Exact, vec![q2 - 2 * qi]),
                2 => (DStatus::Exact, vec![q2 - 2 * qi + 1]),
                3..=5 => (DStatus::Exact, vec![n as i64 - (9 - *l as i64) * qi]),
                6 => (DStatus::Dichotomy, vec![q2 + 4 * qi, q2 + 4 * qi + 1]),
                _ => return Err(Error::InvalidParams(format!("Del Pezzo surfaces need l <= 6, got {l}"))),
            };
            Ok(Prediction {
                n,
                k,
                k_is_upper_bound: false,
                d: Some(PredictedD { status, values }),
                weights: None,
                min_weight_count: None,
                anchor: "Del Pezzo surface codes (Boguslavsky)".into(),
            })
        }
        Variety::ProductP1xP1 { alpha, beta } => {
            let (a, b) = (*alpha as u64, *beta as u64);
            if a > q || b > q {
                return Err(refuse(format!("bidegree ({a},{b}) exceeds q = {q}")));
            }
            Ok(Prediction::exact(
                (q + 1) * (q + 1),
                (a + 1) * (b + 1),
                (q + 1 - a) * (q + 1 - b),
                "P1 x P1 by covering families of lines",
            ))
        }
        Variety::Schubert { .. } | Variety::Toric { .. } | Variety::CompleteIntersection { .. } => Err(refuse(
            format!("no closed-form parameters for the {} family", desc.variety.family_name()),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(json: &str, h: u32) -> Result<Prediction> {
        predict(&Descriptor::from_json(json).unwrap(), h)
    }

    fn triple(pr: &Prediction) -> (u64, u64, i64) {
        (pr.n, pr.k, pr.d.as_ref().unwrap().values[0])
    }

    #[test]
    fn examples() {
        assert_eq!(triple(&p(r#"{"q":2,"family":"projective_space","m":2}"#, 1).unwrap()), (7, 3, 4));
        assert_eq!(triple(&p(r#"{"q":3,"family":"quadric","m":3,"w":0}"#, 1).unwrap()), (10, 4, 6));
        assert_eq!(triple(&p(r#"{"q":5,"family":"del_pezzo","l":4}"#, 1).unwrap()), (51, 6, 26));
        assert_eq!(triple(&p(r#"{"q":7,"family":"del_pezzo","l":5}"#, 1).unwrap()), (92, 5, 64));
        assert_eq!(triple(&p(r#"{"q":8,"family":"quadric","m":3,"w":2}"#, 1).unwrap()), (81, 4, 64));
        assert_eq!(triple(&p(r#"{"q":8,"family":"quadric","m":3,"w":0}"#, 1).unwrap()), (65, 4, 56));
        assert_eq!(triple(&p(r#"{"q":3,"family":"grassmann","l":2,"m":4}"#, 1).unwrap()), (130, 6, 81));
        assert_eq!(triple(&p(r#"{"q":3,"family":"flag","m":3}"#, 1).unwrap()), (52, 8, 24));
        assert_eq!(triple(&p(r#"{"q":3,"family":"p1xp1","alpha":1,"beta":1}"#, 1).unwrap()), (16, 4, 9));
    }

    #[test]
    fn hermitian_weight_sets() {
        let c = p(r#"{"q":4,"family":"hermitian","m":2,"r":2}"#, 1).unwrap();
        assert_eq!(triple(&c), (9, 3, 6));
        assert_eq!(c.weights, Some(vec![6, 8]));
        let s = p(r#"{"q":4,"family":"hermitian","m":3,"r":2}"#, 1).unwrap();
        assert_eq!(triple(&s), (45, 4, 32));
        assert_eq!(s.weights, Some(vec![32, 36]));
        let c9 = p(r#"{"q":9,"family":"hermitian","m":2,"r":3}"#, 1).unwrap();
        assert_eq!(triple(&c9), (28, 3, 24));
        let s2 = p(r#"{"q":4,"family":"hermitian","m":3,"r":2}"#, 2).unwrap();
        assert_eq!(s2.d.unwrap(), PredictedD { status: DStatus::LowerBound, values: vec![15] });
        assert_eq!(s2.k, 10);
    }

    #[test]
    fn del_pezzo_dichotomy() {
        let c = p(r#"{"q":5,"family":"del_pezzo","l":6}"#, 1).unwrap();
        let d = c.d.unwrap();
        assert_eq!(d.status, DStatus::Dichotomy);
        assert!(d.admits(45) && d.admits(46) && !d.admits(44));
        assert!(matches!(p(r#"{"q":4,"family":"del_pezzo","l":6}"#, 1), Err(Error::OutOfTheoremRange(_))));
    }

    #[test]
    fn quadric_higher_degree_gives_dimension_bound() {
        let c = p(r#"{"q":3,"family":"quadric","m":3,"w":2}"#, 2).unwrap();
        assert!(c.k_is_upper_bound);
        assert_eq!(c.k, 9);
        assert!(c.d.is_none());
    }

    #[test]
    fn refusals() {
        assert!(matches!(
            p(r#"{"q":2,"family":"projective_space","m":2}"#, 3),
            Err(Error::OutOfTheoremRange(_))
        ));
        assert!(matches!(p(r#"{"q":2,"family":"quadric","m":2,"w":2}"#, 1), Err(Error::ParityMismatch { .. })));
        assert!(matches!(
            p(r#"{"q":2,"family":"grassmann","l":2,"m":4}"#, 2),
            Err(Error::OutOfTheoremRange(_))
        ));
        assert!(matches!(
            p(r#"{"q":3,"family":"toric","s":1,"lattice":[[0]]}"#, 1),
            Err(Error::OutOfTheoremRange(_))
        ));
    }
}
