//! Exhaustive codeword enumeration over scalar classes of messages.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

use super::LinearCode;

pub const DEFAULT_BUDGET: u64 = 1 << 31;

/// Cost cap (in elementary column operations) and worker count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Search {
    pub budget: u64,
    pub workers: usize,
}

impl Default for Search {
    fn default() -> Self {
        Search {
            budget: DEFAULT_BUDGET,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl Search {
    pub fn new(budget: u64, workers: usize) -> Search {
        Search {
            budget,
            workers: workers.max(1),
        }
    }

    pub(crate) fn check(&self, estimate: u128) -> Result<()> {
        if estimate > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                estimate,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

fn saturating_pow(q: u64, k: usize) -> u128 {
    (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// n (q^k - 1) / (q - 1)
pub(crate) fn class_cost(code: &LinearCode) -> u128 {
    let q = code.q();
    let classes = (saturating_pow(q, code.k()) - 1) / (q as u128 - 1);
    classes.saturating_mul(code.n() as u128)
}

/// Weight histogram A_w.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightEnumerator {
    pub counts: BTreeMap<u64, u64>,
}

impl WeightEnumerator {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn support(&self) -> Vec<u64> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    pub fn min_weight(&self) -> Option<u64> {
        self.support().first().copied()
    }

    pub fn count(&self, w: u64) -> u64 {
        self.counts.get(&w).copied().unwrap_or(0)
    }
}

enum Adder<'a> {
    Table(Vec<u32>, u32),
    Field(&'a FieldSpec),
}

impl Adder<'_> {
    fn new(f: &FieldSpec) -> Adder<'_> {
        let q = f.q();
        if q <= 256 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in f.elements() {
                for b in f.elements() {
                    t[(a.0 * q + b.0) as usize] = f.add(a, b).0;
                }
            }
            Adder::Table(t, q)
        } else {
            Adder::Field(f)
        }
    }

    #[inline(always)]
    fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Adder::Table(t, q) => t[(a * q + b) as usize],
            Adder::Field(f) => f.add(crate::gf::Elem(a), crate::gf::Elem(b)).0,
        }
    }
}

struct Enumerator<'a> {
    k: usize,
    n: usize,
    q: u32,
    /// multiples[i][c] = c * row_i
    multiples: Vec<Vec<Vec<u32>>>,
    adder: Adder<'a>,
}

impl<'a> Enumerator<'a> {
    fn new(code: &'a LinearCode) -> Enumerator<'a> {
        let f = code.field();
        let g = code.generator();
        let multiples = (0..code.k())
            .map(|i| {
                f.elements()
                    .map(|c| g.row(i).iter().map(|&a| f.mul(c, a).0).collect())
                    .collect()
            })
            .collect();
        Enumerator {
            k: code.k(),
            n: code.n(),
            q: f.q(),
            multiples,
            adder: Adder::new(f),
        }
    }

    fn add_into(&self, dst: &mut [u32], src: &[u32], row: &[u32]) {
        for ((d, &s), &r) in dst.iter_mut().zip(src).zip(row) {
            *d = self.adder.add(s, r);
        }
    }

    /// Messages whose first nonzero coordinate is a 1 at `lead`, with the next
    /// coordinate fixed to `next` when there is one.
    fn run_task(&self, lead: usize, next: Option<u32>, hist: &mut [u64]) {
        let mut bufs = vec![vec![0u32; self.n]; self.k + 1];
        let depth = match next {
            Some(c) => {
                let (a, b) = bufs.split_at_mut(1);
                self.add_into(&mut b[0], &a[0], &self.multiples[lead][1]);
                let tmp = b[0].clone();
                self.add_into(&mut b[0], &tmp, &self.multiples[lead + 1][c as usize]);
                lead + 2
            }
            None => {
                let (a, b) = bufs.split_at_mut(1);
                self.add_into(&mut b[0], &a[0], &self.multiples[lead][1]);
                lead + 1
            }
        };
        // bufs[1] holds the partial codeword before row `depth`
        self.dfs(depth, 1, &mut bufs, hist);
    }

    fn dfs(&self, row: usize, level: usize, bufs: &mut [Vec<u32>], hist: &mut [u64]) {
        if row == self.k {
            let w = bufs[level].iter().filter(|&&x| x != 0).count();
            hist[w] += 1;
            return;
        }
        if row + 1 == self.k {
            let cur = &bufs[level];
            for c in 0..self.q as usize {
                let mult = &self.multiples[row][c];
                let w = cur
                    .iter()
                    .zip(mult)
                    .filter(|(&a, &b)| self.adder.add(a, b) != 0)
                    .count();
                hist[w] += 1;
            }
            return;
        }
        // c = 0 leaves the partial codeword unchanged
        {
            let (head, tail) = bufs.split_at_mut(level + 1);
            tail[0].copy_from_slice(&head[level]);
        }
        self.dfs(row + 1, level + 1, bufs, hist);
        for c in 1..self.q as usize {
            let (head, tail) = bufs.split_at_mut(level + 1);
            self.add_into(&mut tail[0], &head[level], &self.multiples[row][c]);
            self.dfs(row + 1, level + 1, bufs, hist);
        }
    }

    fn tasks(&self) -> Vec<(usize, Option<u32>)> {
        let mut t = Vec::new();
        for lead in 0..self.k {
            if lead + 1 < self.k {
                t.extend((0..self.q).map(|c| (lead, Some(c))));
            } else {
                t.push((lead, None));
            }
        }
        t
    }

    /// Histogram of weights over one representative per scalar class.
    fn class_histogram(&self, workers: usize) -> Vec<u64> {
        let tasks = self.tasks();
        let next = AtomicUsize::new(0);
        let total = Mutex::new(vec![0u64; self.n + 1]);
        std::thread::scope(|s| {
            for _ in 0..workers.min(tasks.len()).max(1) {
                s.spawn(|| {
                    let mut hist = vec![0u64; self.n + 1];
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&(lead, c)) = tasks.get(i) else { break };
                        self.run_task(lead, c, &mut hist);
                    }
                    let mut t = total.lock().unwrap();
                    for (a, b) in t.iter_mut().zip(hist) {
                        *a += b;
                    }
                });
            }
        });
        total.into_inner().unwrap()
    }
}

/// Exact minimum distance.
pub fn min_distance(code: &LinearCode, search: &Search) -> Result<u64> {
    if code.k() == 0 {
        return Err(Error::InvalidParams("the zero code has no minimum distance".into()));
    }
    search.check(class_cost(code))?;
    let hist = Enumerator::new(code).class_histogram(search.workers);
    hist.iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(w, _)| w as u64)
        .ok_or_else(|| Error::Invariant("a nonzero message encoded to zero".into()))
}

/// Exact weight distribution over all q^k codewords.
pub fn weight_distribution(code: &LinearCode, search: &Search) -> Result<WeightEnumerator> {
    let estimate = saturating_pow(code.q(), code.k()).saturating_mul(code.n() as u128);
    search.check(estimate)?;
    let mut counts = BTreeMap::new();
    counts.insert(0, 1);
    if code.k() > 0 {
        let hist = Enumerator::new(code).class_histogram(search.workers);
        if hist[0] != 0 {
            return Err(Error::Invariant("a nonzero message encoded to zero".into()));
        }
        for (w, &c) in hist.iter().enumerate().skip(1) {
            if c > 0 {
                counts.insert(w as u64, c * (code.q() - 1));
            }
        }
    }
    Ok(WeightEnumerator { counts })
}
