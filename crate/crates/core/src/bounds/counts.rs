//! Closed-form point counts.

use crate::error::{Error, Result};

pub use crate::projgeom::projective_count;

/// Points on a nondegenerate quadric in P^m with character `w`.
pub fn nondegenerate_quadric_count(q: u64, m: u32, w: u8) -> Result<u64> {
    let parity_ok = match w {
        1 => m % 2 == 0,
        0 | 2 => m % 2 == 1,
        _ => false,
    };
    if !parity_ok {
        return Err(Error::InvalidParams(format!(
            "character {w} is not possible for a nondegenerate quadric in P^{m}"
        )));
    }
    let w = w as u32;
    let a = q.pow((m + 1 - w) / 2) + 1;
    let b = q.pow((m + w - 1) / 2) - 1;
    Ok(a * b / (q - 1))
}

/// Points on a quadric of rank `rho` in P^m: a cone with vertex P^{m-rho}
/// over a nondegenerate quadric of character `w` in P^{rho-1}.
pub fn quadric_count(q: u64, m: u32, rho: u32, w: u8) -> Result<u64> {
    if rho == 0 || rho > m + 1 {
        return Err(Error::InvalidParams(format!("rank {rho} out of range for P^{m}")));
    }
    let base = nondegenerate_quadric_count(q, rho - 1, w)?;
    let t = m + 1 - rho;
    let vertex = if t == 0 { 0 } else { projective_count(q, t - 1) };
    Ok(vertex + q.pow(t) * base)
}

/// Points on the Hermitian hypersurface of P^m over GF(r^2).
pub fn hermitian_count(r: u64, m: u32) -> Result<u64> {
    if r < 2 || m < 1 {
        return Err(Error::InvalidParams(format!("Hermitian count needs r >= 2, m >= 1 (r={r}, m={m})")));
    }
    let sign: i128 = if m % 2 == 0 { 1 } else { -1 };
    let b = r as i128 * (r.pow(m) as i128 - sign) / (r as i128 + 1);
    let base = projective_count(r * r, m - 1) as i128;
    Ok((base + b * r.pow(m - 1) as i128) as u64)
}

/// Number of l-dimensional subspaces of F_q^m.
pub fn gaussian_binomial(q: u64, m: u32, l: u32) -> u64 {
    if l > m {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..l {
        num *= (q as u128).pow(m - i) - 1;
        den *= (q as u128).pow(i + 1) - 1;
    }
    (num / den) as u64
}

/// Incident point-hyperplane pairs of P^{m-1}(F_q).
pub fn flag_count(q: u64, m: u32) -> u64 {
    (q.pow(m) - 1) * (q.pow(m - 1) - 1) / ((q - 1) * (q - 1))
}

/// Minimum-weight codewords of the Grassmann code C(G(l, m)).
pub fn grassmann_min_weight_count(q: u64, l: u32, m: u32) -> u64 {
    (q - 1) * gaussian_binomial(q, m, l)
}

/// Degree of G(l, m) in its Plücker embedding.
pub fn grassmann_degree(l: u32, m: u32) -> u64 {
    let fact = |n: u32| (1..=n as u128).product::<u128>();
    let mut num = fact(l * (m - l));
    let mut den = 1u128;
    for i in 0..l {
        num *= fact(i);
        den *= fact(m - l + i);
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grassmann_degrees() {
        assert_eq!(grassmann_degree(1, 4), 1);
        assert_eq!(grassmann_degree(2, 4), 2);
        assert_eq!(grassmann_degree(2, 5), 5);
        assert_eq!(grassmann_degree(2, 6), 14);
        assert_eq!(grassmann_degree(3, 6), 42);
    }

    #[test]
    fn examples() {
        assert_eq!(nondegenerate_quadric_count(2, 3, 0).unwrap(), 5);
        assert_eq!(nondegenerate_quadric_count(2, 3, 2).unwrap(), 9);
        assert_eq!(nondegenerate_quadric_count(8, 3, 2).unwrap(), 81);
        assert_eq!(nondegenerate_quadric_count(8, 3, 0).unwrap(), 65);
        assert_eq!(nondegenerate_quadric_count(3, 2, 1).unwrap(), 4);
        assert!(nondegenerate_quadric_count(3, 2, 2).is_err());
        assert_eq!(gaussian_binomial(2, 4, 2), 35);
        assert_eq!(gaussian_binomial(3, 4, 2), 130);
        assert_eq!(grassmann_min_weight_count(2, 2, 4), 35);
        assert_eq!(grassmann_min_weight_count(3, 2, 4), 260);
        assert_eq!(hermitian_count(2, 3).unwrap(), 45);
        assert_eq!(hermitian_count(2, 2).unwrap(), 9);
        assert_eq!(hermitian_count(3, 2).unwrap(), 28);
        assert_eq!(flag_count(2, 3), 21);
        assert_eq!(flag_count(3, 3), 52);
    }

    #[test]
    fn second_quadric_formula_agrees() {
        // q^{m-1} + ... + 1 + (w - 1) q^{(m-1)/2}
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for m in 1..=6u32 {
                for w in 0..=2u8 {
                    let Ok(n) = nondegenerate_quadric_count(q, m, w) else { continue };
                    let alt = projective_count(q, m - 1) as i64
                        + (w as i64 - 1) * q.pow((m - 1) / 2) as i64 * if m % 2 == 1 { 1 } else { 0 };
                    assert_eq!(n as i64, alt);
                }
            }
        }
    }

    #[test]
    fn cone_counts_reduce_to_nondegenerate() {
        for q in [2u64, 3, 5] {
            for m in 1..=4u32 {
                for w in 0..=2u8 {
                    if let Ok(n) = nondegenerate_quadric_count(q, m, w) {
                        assert_eq!(quadric_count(q, m, m + 1, w).unwrap(), n);
                    }
                }
            }
        }
        // double plane x0^2 in P^2: the line x0 = 0
        assert_eq!(quadric_count(3, 2, 1, 1).unwrap(), 4);
    }

    #[test]
    fn gaussian_symmetry() {
        for q in [2u64, 3, 4] {
            for m in 1..=6u32 {
                for l in 0..=m {
                    assert_eq!(gaussian_binomial(q, m, l), gaussian_binomial(q, m, m - l));
                }
            }
        }
    }
}
