//! Generalized Hamming weights by subspace enumeration.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use itertools::Itertools;

use crate::bounds::counts::gaussian_binomial;
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::projgeom::increment;

use super::{LinearCode, Search};

type Bits = Vec<u64>;

fn popcount(b: &[u64]) -> u64 {
    b.iter().map(|w| w.count_ones() as u64).sum()
}

fn support_bits(word: &[Elem]) -> Bits {
    let mut b = vec![0u64; word.len().div_ceil(64)];
    for (j, a) in word.iter().enumerate() {
        if !a.is_zero() {
            b[j / 64] |= 1 << (j % 64);
        }
    }
    b
}

/// Supports of all candidate rows for one pivot pattern: row i has a 1 at
/// pivots[i], zeros at the other pivots and before pivots[i], and free entries
/// elsewhere.
fn candidate_supports(code: &LinearCode, pivots: &[usize]) -> Vec<Vec<Bits>> {
    let k = code.k();
    let q = code.field().q();
    pivots
        .iter()
        .map(|&p| {
            let free: Vec<usize> = (p + 1..k).filter(|c| !pivots.contains(c)).collect();
            let mut digits = vec![0u32; free.len()];
            let mut out = Vec::new();
            loop {
                let mut msg = vec![Elem::ZERO; k];
                msg[p] = Elem::ONE;
                for (&c, &d) in free.iter().zip(&digits) {
                    msg[c] = Elem(d);
                }
                out.push(support_bits(&code.encode(&msg).expect("message length k")));
                if !increment(&mut digits, q) {
                    break;
                }
            }
            out
        })
        .collect()
}

fn search_min(rows: &[Vec<Bits>], i: usize, acc: &Bits, best: &AtomicU64) {
    if i == rows.len() {
        best.fetch_min(popcount(acc), Ordering::Relaxed);
        return;
    }
    for cand in &rows[i] {
        let next: Bits = acc.iter().zip(cand).map(|(a, b)| a | b).collect();
        if popcount(&next) < best.load(Ordering::Relaxed) {
            search_min(rows, i + 1, &next, best);
        }
    }
}

/// The r-th generalized Hamming weight: the smallest support of an
/// r-dimensional subcode.
pub fn ghw(code: &LinearCode, r: usize, search: &Search) -> Result<u64> {
    let k = code.k();
    if r < 1 || r > k {
        return Err(Error::InvalidParams(format!("r = {r} must lie in 1..={k}")));
    }
    let estimate = gaussian_binomial(code.q(), k as u32, r as u32) as u128 * code.n() as u128;
    search.check(estimate)?;
    let patterns: Vec<Vec<usize>> = (0..k).combinations(r).collect();
    let best = AtomicU64::new(code.n() as u64 + 1);
    let next = AtomicUsize::new(0);
    let empty: Bits = vec![0; code.n().div_ceil(64)];
    std::thread::scope(|s| {
        for _ in 0..search.workers.min(patterns.len()).max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(p) = patterns.get(i) else { break };
                let rows = candidate_supports(code, p);
                search_min(&rows, 0, &empty, &best);
            });
        }
    });
    Ok(best.into_inner())
}

/// (d_1, ..., d_k)
pub fn ghw_hierarchy(code: &LinearCode, search: &Search) -> Result<Vec<u64>> {
    (1..=code.k()).map(|r| ghw(code, r, search)).collect()
}
