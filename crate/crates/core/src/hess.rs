//! Hessenberg functions h: {1..n} -> {1..n} (weakly increasing, h(j) >= j)
//! and the combinatorics read off their stair shapes: the modified function,
//! its corners, enumeration and seeded sampling.

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Largest n for which exhaustive enumerations (permutations, Hessenberg
/// functions) are permitted.
pub const ENUMERATION_GUARD: usize = 9;

/// A Hessenberg function, stored as its value list h(1), ..., h(n).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HessFn {
    values: Vec<usize>,
}

impl HessFn {
    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidHessFn { values, reason: "empty value list".into() });
        }
        for (idx, &v) in values.iter().enumerate() {
            let j = idx + 1;
            if v < j || v > n {
                return Err(Error::InvalidHessFn {
                    values: values.clone(),
                    reason: format!("h({j}) = {v} violates {j} <= h({j}) <= {n}"),
                });
            }
            if idx > 0 && values[idx - 1] > v {
                return Err(Error::InvalidHessFn {
                    values: values.clone(),
                    reason: format!("h({}) > h({j}), not weakly increasing", j - 1),
                });
            }
        }
        Ok(HessFn { values })
    }

    /// Parses the comma-separated text form, e.g. "2,4,5,5,5".
    pub fn parse(text: &str) -> Result<Self> {
        let values = text
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidHessFn {
                values: Vec::new(),
                reason: format!("unparseable value list {text:?}: {e}"),
            })?;
        Self::from_values(values)
    }

    /// h(j) = j for all j.
    pub fn springer(n: usize) -> Result<Self> {
        Self::from_values((1..=n).collect())
    }

    /// h(j) = n for all j (the full flag variety).
    pub fn full(n: usize) -> Result<Self> {
        Self::from_values(vec![n; n])
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// h(j), 1-based.
    pub fn value(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.values.len(), "argument {j} out of range");
        self.values[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Sum of all values minus one — the dimension of the corresponding
    /// Hessenberg space inside the Borel count.
    pub fn dim_h(&self) -> usize {
        self.values.iter().sum::<usize>() - 1
    }

    /// The modified function: h̄(j) = h(j) - 1 when h(j-1) = j-1 and
    /// h(j) = j (with h(0) = 0), and h̄(j) = h(j) otherwise.
    pub fn modified(&self) -> ModifiedHessFn {
        let n = self.n();
        let mut values = Vec::with_capacity(n);
        for j in 1..=n {
            let prev = if j == 1 { 0 } else { self.value(j - 1) };
            let cur = self.value(j);
            if prev == j - 1 && cur == j {
                values.push(cur - 1);
            } else {
                values.push(cur);
            }
        }
        ModifiedHessFn { values }
    }

    /// Corners of the modified stair shape: boxes (h̄(j), j) at every column
    /// j where h̄ strictly increases (with h̄(0) = 0).
    pub fn corners(&self) -> Vec<Corner> {
        let modified = self.modified();
        let mut corners = Vec::new();
        for j in 1..=self.n() {
            let prev = if j == 1 { 0 } else { modified.value(j - 1) };
            let cur = modified.value(j);
            if prev < cur {
                corners.push(Corner { row: cur, col: j });
            }
        }
        corners
    }

    /// Boxes (row k, column j) of the stair shape, k <= h(j), sorted by
    /// (row, column).
    pub fn stair_boxes(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut boxes = Vec::new();
        for k in 1..=n {
            for j in 1..=n {
                if k <= self.value(j) {
                    boxes.push((k, j));
                }
            }
        }
        boxes
    }

    /// ASCII rendering of the stair shape, rows top to bottom.
    pub fn stair_ascii(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        for k in 1..=n {
            for j in 1..=n {
                out.push(if k <= self.value(j) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.values)
    }
}

impl fmt::Display for HessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Like a Hessenberg function, except the value at j = 1 may be 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedHessFn {
    values: Vec<usize>,
}

impl ModifiedHessFn {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.values.len(), "argument {j} out of range");
        self.values[j - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// A corner box of the modified stair shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Corner {
    pub row: usize,
    pub col: usize,
}

/// All valid Hessenberg functions for n, in lexicographic order of their
/// value lists.  Their number is the n-th Catalan number.
pub fn enumerate(n: usize) -> Result<Vec<HessFn>> {
    guard(n)?;
    let mut out = Vec::new();
    let mut values = Vec::with_capacity(n);
    fn rec(n: usize, values: &mut Vec<usize>, out: &mut Vec<HessFn>) {
        let j = values.len() + 1;
        if j > n {
            out.push(HessFn { values: values.clone() });
            return;
        }
        let lo = std::cmp::max(j, values.last().copied().unwrap_or(1));
        for v in lo..=n {
            values.push(v);
            rec(n, values, out);
            values.pop();
        }
    }
    rec(n, &mut values, &mut out);
    Ok(out)
}

/// Deterministic seeded sample of valid Hessenberg functions: each value is
/// drawn uniformly from the range its predecessors leave open.
pub fn sample(n: usize, count: usize, seed: u64) -> Result<Vec<HessFn>> {
    guard(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut values = Vec::with_capacity(n);
        for j in 1..=n {
            let lo = std::cmp::max(j, values.last().copied().unwrap_or(1));
            values.push(rng.random_range(lo..=n));
        }
        out.push(HessFn { values });
    }
    Ok(out)
}

pub(crate) fn guard(n: usize) -> Result<()> {
    if n == 0 || n > ENUMERATION_GUARD {
        return Err(Error::UnsupportedRank { n, min: 1, max: ENUMERATION_GUARD });
    }
    Ok(())
}
