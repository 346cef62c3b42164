//! Sparse multivariate polynomials over the rationals with a graded
//! lexicographic term order.  Everything downstream (Schubert calculus,
//! coinvariant normal forms, GKM divisibility) runs on these, so the
//! arithmetic is exact throughout — no floating point anywhere.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector of fixed arity.  Ordered by total degree first, then
/// lexicographically with the earlier variable more significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` when any exponent would go negative.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The linear form t_a - t_b (1-based variable indices, a != b).  GKM edge
/// labels are stored this way, canonicalized up to sign so that a < b.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    pub a: usize,
    pub b: usize,
}

impl LinearForm {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 {
            return Err(Error::Malformed {
                what: "linear form",
                reason: format!("t{a}-t{b} is not a difference of distinct variables"),
            });
        }
        Ok(LinearForm { a, b })
    }

    /// Same form up to sign, with a < b.
    pub fn canonical(&self) -> LinearForm {
        if self.a < self.b {
            *self
        } else {
            LinearForm { a: self.b, b: self.a }
        }
    }

    pub fn to_poly(&self, nvars: usize) -> Result<MultiPoly> {
        let va = MultiPoly::var(nvars, self.a)?;
        let vb = MultiPoly::var(nvars, self.b)?;
        Ok(&va - &vb)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}-t{}", self.a, self.b)
    }
}

/// Rational-coefficient polynomial in `nvars` variables, canonical form
/// (no zero terms stored).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(nvars), c);
        p
    }

    /// The variable x_index, 1-based.
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index == 0 || index > nvars {
            return Err(Error::VarOutOfRange { index, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[index - 1] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), BigRational::one());
        Ok(p)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: BigRational) -> Result<Self> {
        if exps.len() != nvars {
            return Err(Error::SizeMismatch { expected: nvars, got: exps.len() });
        }
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), coeff);
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: BigRational) {
        debug_assert_eq!(mono.0.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterates `(monomial, coefficient)` in ascending term order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Greatest term under the graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// `Some(d)` when all terms share total degree d (zero counts as
    /// homogeneous of any degree and returns `None`).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// The degree-d part.
    pub fn homogeneous_component(&self, d: usize) -> MultiPoly {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::SizeMismatch { expected: self.nvars, got: point.len() });
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Replaces x_a by x_b everywhere (the divisibility test behind GKM edge
    /// conditions: p is divisible by x_a - x_b iff this returns zero... the
    /// caller does that comparison).
    pub fn substitute_equal(&self, a: usize, b: usize) -> Result<MultiPoly> {
        if a == 0 || a > self.nvars {
            return Err(Error::VarOutOfRange { index: a, nvars: self.nvars });
        }
        if b == 0 || b > self.nvars {
            return Err(Error::VarOutOfRange { index: b, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[a - 1];
            exps[a - 1] = 0;
            exps[b - 1] += e;
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// General single-variable substitution x_var := replacement.
    pub fn substitute(&self, var: usize, replacement: &MultiPoly) -> Result<MultiPoly> {
        if var == 0 || var > self.nvars {
            return Err(Error::VarOutOfRange { index: var, nvars: self.nvars });
        }
        if replacement.nvars != self.nvars {
            return Err(Error::SizeMismatch { expected: self.nvars, got: replacement.nvars });
        }
        let max_e = self.terms.keys().map(|m| m.0[var - 1]).max().unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Self::one(self.nvars));
        for _ in 0..max_e {
            let next = powers.last().unwrap() * replacement;
            powers.push(next);
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var - 1];
            let mut rest = m.0.clone();
            rest[var - 1] = 0;
            for (pm, pc) in powers[e as usize].iter() {
                out.add_term(Monomial(rest.clone()).mul(pm), c * pc);
            }
        }
        Ok(out)
    }

    /// Swaps the variables x_a and x_b.
    pub fn swap_vars(&self, a: usize, b: usize) -> Result<MultiPoly> {
        if a == 0 || a > self.nvars {
            return Err(Error::VarOutOfRange { index: a, nvars: self.nvars });
        }
        if b == 0 || b > self.nvars {
            return Err(Error::VarOutOfRange { index: b, nvars: self.nvars });
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.swap(a - 1, b - 1);
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Divided difference (p - s_i p)/(x_i - x_{i+1}), where s_i swaps
    /// x_i and x_{i+1}.  Computed termwise from the closed form of
    /// (x^p y^q - x^q y^p)/(x - y), so the division is exact by
    /// construction; a product check lives in the tests.
    pub fn divided_difference(&self, i: usize) -> Result<MultiPoly> {
        if i == 0 || i + 1 > self.nvars {
            return Err(Error::VarOutOfRange { index: i + 1, nvars: self.nvars });
        }
        let (lo, hi) = (i - 1, i);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let (p, q) = (m.0[lo], m.0[hi]);
            if p == q {
                continue;
            }
            let (lo_start, total, sign) = if p > q {
                (q, p - 1, c.clone())
            } else {
                (p, q - 1, -c.clone())
            };
            // x^p y^q - x^q y^p = (x - y) * sum_k x^(lo_start+k) y^(total-k)
            for k in 0..p.abs_diff(q) {
                let mut exps = m.0.clone();
                exps[lo] = lo_start + k;
                exps[hi] = total - k;
                out.add_term(Monomial(exps), sign.clone());
            }
        }
        Ok(out)
    }

    /// Complete homogeneous symmetric polynomial h_degree(x_1..x_upto),
    /// embedded in `nvars` variables.
    pub fn complete_homogeneous(nvars: usize, upto: usize, degree: usize) -> Result<MultiPoly> {
        if upto == 0 || upto > nvars {
            return Err(Error::VarOutOfRange { index: upto, nvars });
        }
        let mut out = Self::zero(nvars);
        let mut exps = vec![0u32; nvars];
        fn rec(out: &mut MultiPoly, exps: &mut Vec<u32>, var: usize, upto: usize, left: usize) {
            if var == upto - 1 {
                exps[var] = left as u32;
                out.add_term(Monomial(exps.clone()), BigRational::one());
                exps[var] = 0;
                return;
            }
            for e in 0..=left {
                exps[var] = e as u32;
                rec(out, exps, var + 1, upto, left - e);
            }
            exps[var] = 0;
        }
        rec(&mut out, &mut exps, 0, upto, degree);
        Ok(out)
    }

    /// Elementary symmetric polynomial e_degree(x_1..x_upto), embedded in
    /// `nvars` variables.
    pub fn elementary_symmetric(nvars: usize, upto: usize, degree: usize) -> Result<MultiPoly> {
        if upto == 0 || upto > nvars {
            return Err(Error::VarOutOfRange { index: upto, nvars });
        }
        let mut out = Self::zero(nvars);
        if degree > upto {
            return Ok(out);
        }
        let vars: Vec<usize> = (0..upto).collect();
        for subset in itertools::Itertools::combinations(vars.into_iter(), degree) {
            let mut exps = vec![0u32; nvars];
            for v in subset {
                exps[v] = 1;
            }
            out.add_term(Monomial(exps), BigRational::one());
        }
        Ok(out)
    }

    /// Text form, leading term first, `*` between factors, e.g.
    /// `x1^2*x2 - 1/2*x3`.
    pub fn to_text(&self, prefix: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
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
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{prefix}{}", v + 1)),
                    _ => factors.push(format!("{prefix}{}^{}", v + 1, e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// JSON serialization: list of `[exponent-vector, coefficient-string]`
    /// pairs in ascending term order.
    pub fn to_json_pairs(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| serde_json::json!([m.0, c.to_string()]))
                .collect(),
        )
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in self.iter() {
            for (mb, cb) in rhs.iter() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

/// Convenience constructor used all over the tests: integer-coefficient
/// polynomial from (coeff, exponents) pairs.
pub fn poly_from_int_terms(nvars: usize, terms: &[(i64, &[u32])]) -> MultiPoly {
    let mut p = MultiPoly::zero(nvars);
    for (c, exps) in terms {
        assert_eq!(exps.len(), nvars);
        p.add_term(Monomial(exps.to_vec()), rat_int(*c));
    }
    p
}
