//! Minimum-distance bounds and parameter calculators. Everything here is a
//! pure integer function.

pub mod counts;

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::Matrix;
use crate::projgeom::binomial;
use counts::projective_count;

pub mod anchor {
    pub const ELEMENTARY: &str = "Lachaud: varieties of dimension delta and degree s < q + 1";
    pub const COVERING: &str = "S. H. Hansen: covering families of curves";
    pub const CAYLEY_BACHARACH: &str = "Cayley-Bacharach (Davis-Geramita-Orecchia) for complete intersections";
    pub const BALLICO_FONTANARI: &str = "Ballico-Fontanari refinement of Cayley-Bacharach";
    pub const WEIL: &str = "Weil-Deligne bound for smooth nondegenerate hypersurfaces";
    pub const LACHAUD_SECTIONS: &str = "Lachaud: hyperplane sections of smooth hypersurfaces";
    pub const GRIESMER: &str = "Griesmer bound";
    pub const SINGLETON: &str = "Singleton bound";
    pub const SORENSEN: &str = "Sorensen conjecture for Hermitian surface codes (CONJECTURE)";
    pub const HERMITIAN_CH: &str = "degree bound for C_h codes on the Hermitian surface, h < r + 1";
    pub const RULED: &str = "S. H. Hansen: normalized ruled surfaces";
    pub const DL_A24: &str = "S. H. Hansen: Deligne-Lusztig surface of type 2A4";
    pub const COUNTS: &str = "closed-form rational point counts";
}

/// A calculator result as emitted by the `bound` command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub value: BoundValue,
    pub anchor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundValue {
    DLower { d: i64 },
    DUpper { d: i64 },
    Length { n: u64 },
    Interval { lo: i64, hi: i64 },
    Count { value: u64 },
    CayleyBacharach(CayleyBacharach),
    Sections(LachaudBounds),
    Code { n: u64, k: u64, d_lower: i64 },
}

impl BoundReport {
    pub fn new(name: &str, inputs: &[(&str, serde_json::Value)], value: BoundValue, anchor: &str) -> BoundReport {
        BoundReport {
            name: name.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            value,
            anchor: anchor.to_string(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> BoundReport {
        self.note = Some(note.into());
        self
    }
}

/// floor(sqrt(x))
fn isqrt(x: u128) -> u128 {
    x.isqrt()
}

fn pow128(b: u64, e: u32) -> u128 {
    (b as u128).pow(e)
}

/// floor(c * sqrt(q^e)) for c >= 0.
fn scaled_root(c: u128, q: u64, e: u32) -> i128 {
    isqrt(c * c * pow128(q, e)) as i128
}

pub fn elementary_bound(n: u64, s: u64, delta: u32, q: u64) -> Result<i64> {
    if s >= q + 1 {
        return Err(Error::DegreeTooLarge { s, q });
    }
    if delta < 1 {
        return Err(Error::InvalidParams("dimension delta must be at least 1".into()));
    }
    Ok(n as i64 - (s * projective_count(q, delta - 1)) as i64)
}

/// `n_s - l N - (a - l) eta` for a cover of S by `a` curves with at most `N`
/// points of S each, meeting every section in at most `eta` points.
pub fn covering_family_bound(n_s: u64, a: u64, big_n: u64, eta: u64, l: u64) -> Result<i64> {
    if eta > big_n {
        return Err(Error::HypothesisViolated(format!("eta = {eta} exceeds N = {big_n}")));
    }
    if l > a {
        return Err(Error::HypothesisViolated(format!("l = {l} exceeds the number of curves a = {a}")));
    }
    Ok(n_s as i64 - (l * big_n) as i64 - ((a - l) * eta) as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyBacharach {
    /// `sum d_i - m - 1`
    pub s: i64,
    pub d_lower: i64,
    /// Valid only when every m + 1 points of S span P^m.
    pub ballico_fontanari: i64,
}

pub fn cayley_bacharach_bound(degrees: &[u64], h: u64) -> Result<CayleyBacharach> {
    let m = degrees.len() as i64;
    if m == 0 {
        return Err(Error::InvalidParams("at least one degree is required".into()));
    }
    let s = degrees.iter().sum::<u64>() as i64 - m - 1;
    if h < 1 || h as i64 > s {
        return Err(Error::HOutOfRange {
            h,
            lo: 1,
            hi: s.max(0) as u64,
        });
    }
    let h = h as i64;
    Ok(CayleyBacharach {
        s,
        d_lower: s - h + 2,
        ballico_fontanari: m * (s - h) + 2,
    })
}

/// Whether every `m + 1` of the given points in P^m are linearly independent.
pub fn all_subsets_span(field: &Field, points: &[Vec<Elem>]) -> bool {
    let Some(first) = points.first() else { return true };
    let dim = first.len();
    if points.len() < dim {
        return true;
    }
    points.iter().combinations(dim).all(|sub| {
        let rows = sub.into_iter().cloned().collect();
        Matrix::from_rows(field.clone(), dim, rows).expect("equal widths").rank() == dim
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
    pub center: i64,
    pub radius: i64,
}

/// Integer interval containing `#X(F_q)` for a smooth nondegenerate
/// hypersurface of degree `s` in P^m.
pub fn weil_hypersurface_interval(q: u64, m: u32, s: u64) -> Result<Interval> {
    if m < 2 || s < 1 {
        return Err(Error::InvalidParams(format!("need m >= 2 and s >= 1 (m={m}, s={s})")));
    }
    let center = projective_count(q, m - 1) as i64;
    let sign: i128 = if m % 2 == 0 { 1 } else { -1 };
    let b = (s as i128 - 1) * ((s as i128 - 1).pow(m) - sign) / s as i128;
    let radius = scaled_root(b as u128, q, m - 1) as i64;
    Ok(Interval {
        lo: (center - radius).max(0),
        hi: center + radius,
        center,
        radius,
    })
}

/// The Lachaud hyperplane-section estimates for a smooth nondegenerate
/// hypersurface X of degree s in P^m, m >= 3, with S ⊆ X(F_q), n = #S.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LachaudBounds {
    /// Interval for #X_H(F_q).
    pub section_lo: i64,
    pub section_hi: i64,
    pub d_from_section: i64,
    /// |q #X_H - #X| <= comparison_radius.
    pub comparison_radius: i64,
    /// Needs #X.
    pub d_from_comparison: Option<i64>,
    /// Weight bounds around (q-1)n/q and q^{m-2}; need S = X(F_q).
    pub weight_lower_mean: Option<i64>,
    pub weight_lower_center: Option<i64>,
    pub d_lower: i64,
}

pub fn lachaud_section_bounds(q: u64, m: u32, s: u64, n: u64, x_count: Option<u64>) -> Result<LachaudBounds> {
    if m < 3 || s < 1 {
        return Err(Error::InvalidParams(format!("need m >= 3 and s >= 1 (m={m}, s={s})")));
    }
    let c_h = projective_count(q, m - 2) as i128;
    let t = (s as u128 - 1).pow(m - 1);
    let r1 = scaled_root(t, q, m - 1);
    let section_hi = c_h + r1;
    let d_from_section = n as i128 - section_hi;

    let a = t * (q as u128 + s as u128 - 1);
    let r2 = scaled_root(a, q, m - 1);
    let qi = q as i128;
    let d_from_comparison = x_count.map(|x| n as i128 - (x as i128 + r2).div_euclid(qi));

    let full = x_count == Some(n);
    // ceil(((q-1) n - q a sqrt(q^{m-1})) / q) = -floor((floor(q a sqrt(q^{m-1})) - (q-1) n) / q)
    let weight_lower_mean = full.then(|| {
        let root = scaled_root(q as u128 * a, q, m - 1);
        -(root - (qi - 1) * n as i128).div_euclid(qi)
    });
    let weight_lower_center = full.then(|| {
        pow128(q, m - 2) as i128 - scaled_root(s as u128 * t, q, m - 1)
    });

    let d_lower = [Some(d_from_section), d_from_comparison, weight_lower_mean, weight_lower_center]
        .into_iter()
        .flatten()
        .max()
        .unwrap()
        .max(0);
    Ok(LachaudBounds {
        section_lo: (c_h - r1).max(0) as i64,
        section_hi: section_hi as i64,
        d_from_section: d_from_section as i64,
        comparison_radius: r2 as i64,
        d_from_comparison: d_from_comparison.map(|v| v as i64),
        weight_lower_mean: weight_lower_mean.map(|v| v as i64),
        weight_lower_center: weight_lower_center.map(|v| v as i64),
        d_lower: d_lower as i64,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GriesmerMode {
    MaxD,
    MinN,
}

/// Smallest length of a linear [n, k, d]_q code allowed by the Griesmer bound.
pub fn griesmer_min_n(k: u32, q: u64, d: u64) -> u64 {
    let mut total = 0u64;
    let mut qi: u128 = 1;
    for _ in 0..k {
        total += (d as u128).div_ceil(qi) as u64;
        qi = qi.saturating_mul(q as u128);
    }
    total
}

/// Largest d for which an [n, k, d]_q code is not excluded by the Griesmer bound.
pub fn griesmer_max_d(n: u64, k: u32, q: u64) -> u64 {
    (0..=n).rev().find(|&d| griesmer_min_n(k, q, d) <= n).unwrap_or(0)
}

/// `MaxD` reads `value` as n, `MinN` as d.
pub fn griesmer(value: u64, k: u32, q: u64, mode: GriesmerMode) -> Result<u64> {
    if k < 1 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    Ok(match mode {
        GriesmerMode::MaxD => griesmer_max_d(value, k, q),
        GriesmerMode::MinN => griesmer_min_n(k, q, value),
    })
}

pub fn singleton(n: u64, k: u64) -> i64 {
    n as i64 - k as i64 + 1
}

/// Conjectured: `n - (h (r^3 + r^2 - r) + r + 1)`.
pub fn sorensen_bound(n: u64, h: u64, r: u64) -> i64 {
    n as i64 - (h * (r * r * r + r * r - r) + r + 1) as i64
}

pub fn hermitian_ch_bound(n: u64, h: u64, r: u64) -> Result<i64> {
    if h >= r + 1 {
        return Err(Error::HTooLarge { h, r });
    }
    Ok(n as i64 - (h * (r + 1) * (r * r + 1)) as i64)
}

/// Returns `(n, d lower bound)`.
pub fn ruled_surface_bound(a: u64, q: u64, b1: u64, b2: u64, e: i64) -> Result<(u64, i64)> {
    if e < 0 {
        return Err(Error::HypothesisViolated(format!("invariant e = {e} must be nonnegative")));
    }
    if b2 >= a {
        return Err(Error::HypothesisViolated(format!("b2 = {b2} must be smaller than a = {a}")));
    }
    let n = a * (q + 1);
    let d = n as i64 - (b2 * (q + 1)) as i64 - ((a - b2) * b1) as i64;
    if d <= 0 {
        return Err(Error::HypothesisViolated(format!("bound {d} is not positive")));
    }
    Ok((n, d))
}

/// `(n, k, d lower bound)` of the 2A4 Deligne-Lusztig codes over GF(q^2).
pub fn dl_a24_params(q: u64, h: u64) -> Result<(u64, u64, i64)> {
    if h < 1 || h > q * q {
        return Err(Error::HOutOfRange { h, lo: 1, hi: q * q });
    }
    let n = (q.pow(5) + 1) * (q.pow(3) + 1) * (q * q + 1);
    let k = binomial(4 + h, h)
        - if h >= q + 1 {
            binomial(4 + h - (q + 1), h - (q + 1))
        } else {
            0
        };
    let p = (q.pow(3) + 1) * (q.pow(5) + 1) + (q + 1) * (q.pow(3) + 1) * (q * q - h + 1);
    Ok((n, k, n as i64 - (h * p) as i64))
}
