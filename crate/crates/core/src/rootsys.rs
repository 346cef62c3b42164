//! Type A_{n-1} root combinatorics: roots t_i - t_j, simple-root
//! coordinates, the partial order on roots, and the root set attached to a
//! Hessenberg function.

use std::fmt;

use crate::error::{Error, Result};
use crate::hess::HessFn;
use crate::poly::LinearForm;

/// The root t_i - t_j of type A_{n-1}, with i != j and 1-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidRoot { i, j, reason: "indices are 1-based".into() });
        }
        if i == j {
            return Err(Error::InvalidRoot { i, j, reason: "t_i - t_i is not a root".into() });
        }
        Ok(Root { i, j })
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negated(&self) -> Root {
        Root { i: self.j, j: self.i }
    }

    /// Coordinates in the simple-root basis (alpha_1, ..., alpha_{n-1}):
    /// t_i - t_j = alpha_i + ... + alpha_{j-1} for i < j.
    pub fn simple_coords(&self, n: usize) -> Result<Vec<i64>> {
        if self.i > n || self.j > n {
            return Err(Error::InvalidRoot {
                i: self.i,
                j: self.j,
                reason: format!("indices exceed n = {n}"),
            });
        }
        let mut coords = vec![0i64; n.saturating_sub(1)];
        let (lo, hi, sign) = if self.i < self.j { (self.i, self.j, 1) } else { (self.j, self.i, -1) };
        for k in lo..hi {
            coords[k - 1] = sign;
        }
        Ok(coords)
    }

    pub fn to_linear_form(&self) -> LinearForm {
        LinearForm { a: self.i, b: self.j }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}-t{}", self.i, self.j)
    }
}

/// The highest root t_1 - t_n; needs n >= 2.
pub fn highest_root(n: usize) -> Result<Root> {
    if n < 2 {
        return Err(Error::UnsupportedRank { n, min: 2, max: usize::MAX });
    }
    Root::new(1, n)
}

/// alpha_1, ..., alpha_{n-1} in order.
pub fn simple_roots(n: usize) -> Vec<Root> {
    (1..n).map(|i| Root { i, j: i + 1 }).collect()
}

/// All positive roots (i, j), i < j, in lexicographic order.
pub fn positive_roots(n: usize) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Root { i, j });
        }
    }
    out
}

/// All roots, positives then negatives, each block lexicographic.
pub fn all_roots(n: usize) -> Vec<Root> {
    let mut out = positive_roots(n);
    out.extend(positive_roots(n).iter().map(|r| r.negated()));
    out.sort();
    out
}

/// Componentwise order on roots in simple-root coordinates:
/// beta <= gamma iff gamma - beta has nonnegative coordinates.
pub fn root_leq(beta: &Root, gamma: &Root, n: usize) -> Result<bool> {
    let b = beta.simple_coords(n)?;
    let g = gamma.simple_coords(n)?;
    Ok(b.iter().zip(&g).all(|(x, y)| x <= y))
}

/// The Hessenberg root set: all (k, l) with k != l and k <= h(l), sorted
/// lexicographically.
pub fn delta_h(h: &HessFn) -> Vec<Root> {
    let n = h.n();
    let mut out = Vec::new();
    for k in 1..=n {
        for l in 1..=n {
            if k != l && k <= h.value(l) {
                out.push(Root { i: k, j: l });
            }
        }
    }
    out
}
