//! Sparse univariate polynomials with arbitrary-precision integer
//! coefficients.  These carry Poincaré and Hilbert series, so the degree
//! stored here is whatever the caller says it is: constructors that produce
//! cohomology series double their degrees at the boundary, internal
//! computations stay in ordinary degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num::{BigInt, One, Zero};

/// Integer polynomial in one variable, kept in canonical form
/// (no zero coefficients stored).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    terms: BTreeMap<usize, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: usize, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(degree, coeff);
        }
        UniPoly { terms }
    }

    /// Builds a polynomial from dense coefficients, index = degree.
    pub fn from_coeffs<I: Into<BigInt> + Clone>(coeffs: &[I]) -> Self {
        let mut p = UniPoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term(d, c.clone().into());
        }
        p
    }

    /// 1 + t + t^2 + ... + t^top.
    pub fn truncated_geometric(top: usize) -> Self {
        let mut p = UniPoly::zero();
        for d in 0..=top {
            p.add_term(d, BigInt::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, degree: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(degree).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    /// Iterates `(degree, coefficient)` in ascending degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Sum of all coefficients, i.e. the value at 1.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        // Horner over the sparse support, highest degree first.
        let mut prev_deg: Option<usize> = None;
        for (d, c) in self.terms.iter().rev() {
            if let Some(p) = prev_deg {
                acc *= x.pow((p - d) as u32);
            }
            acc += c;
            prev_deg = Some(*d);
        }
        if let Some(p) = prev_deg {
            acc *= x.pow(p as u32);
        }
        acc
    }

    /// Returns the polynomial with every degree doubled (ordinary degree to
    /// cohomological degree).
    pub fn doubled_degrees(&self) -> Self {
        UniPoly { terms: self.terms.iter().map(|(d, c)| (2 * d, c.clone())).collect() }
    }

    /// True when only even degrees carry nonzero coefficients.
    pub fn is_even_supported(&self) -> bool {
        self.terms.keys().all(|d| d % 2 == 0)
    }

    /// JSON serialization as a list of `[degree, coefficient]` pairs in
    /// ascending degree, coefficients rendered as decimal strings so that no
    /// magnitude limit applies.
    pub fn to_json_pairs(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|(d, c)| serde_json::json!([d, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json_pairs(value: &serde_json::Value) -> Option<Self> {
        let mut p = UniPoly::zero();
        for pair in value.as_array()? {
            let pair = pair.as_array()?;
            if pair.len() != 2 {
                return None;
            }
            let deg = pair[0].as_u64()? as usize;
            let coeff: BigInt = pair[1].as_str()?.parse().ok()?;
            p.add_term(deg, coeff);
        }
        Some(p)
    }

    /// Text form like `1 + 4t^2 + 9t^4`, ascending degree.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (d, c)) in self.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if abs.is_one() && d > 0 { String::new() } else { abs.to_string() };
            out.push_str(&coeff_part);
            match d {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&d.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("t"))
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        for (d, c) in rhs.iter() {
            self.add_term(d, c.clone());
        }
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (da, ca) in self.iter() {
            for (db, cb) in rhs.iter() {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}
