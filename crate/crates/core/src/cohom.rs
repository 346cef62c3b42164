//! Cohomology ring presentations.  Schubert polynomials via divided
//! differences, normal forms in the coinvariant algebra, change of basis
//! into Schubert classes, and the quotient ring whose basis is the
//! fixed-point set of a minimal-nilpotent Hessenberg variety.  The span of
//! Schubert classes indexed by non-fixed permutations is an ideal of the
//! coinvariant algebra; dividing by it gives the cohomology ring.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hess::{guard, HessFn};
use crate::poly::{rank_int, rows_to_int, Monomial, MultiPoly, UniPoly};
use crate::report::CheckReport;
use crate::rootsys::Root;
use crate::symgroup::{self, Permutation};
use crate::{betti, gkm};

/// Schubert polynomial of w: start from x_1^{n-1} x_2^{n-2} ... x_{n-1}
/// at the longest element and peel off divided differences along a path of
/// ascents (the result is path-independent; the table construction below
/// takes different paths and the tests compare the two).
pub fn schubert_polynomial(w: &Permutation) -> MultiPoly {
    let n = w.n();
    let mut path = Vec::new();
    let mut u = w.clone();
    while let Some(i) = u.smallest_ascent() {
        path.push(i);
        u = u
            .right_multiply_reflection(&Root { i, j: i + 1 })
            .expect("adjacent transposition");
    }
    let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let mut p = MultiPoly::monomial(n, delta, BigRational::one()).expect("staircase monomial");
    for &i in path.iter().rev() {
        p = p.divided_difference(i).expect("valid index");
    }
    p
}

/// All Schubert polynomials of S_n at once, by breadth-first divided
/// differences downward from the longest element.
pub fn schubert_table(n: usize) -> Result<BTreeMap<Permutation, MultiPoly>> {
    guard(n)?;
    let w0 = Permutation::longest(n);
    let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let mut table = BTreeMap::new();
    table.insert(w0.clone(), MultiPoly::monomial(n, delta, BigRational::one())?);
    let mut frontier = vec![w0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in frontier {
            let sw = table[&w].clone();
            for i in 1..n {
                if w.apply(i) > w.apply(i + 1) {
                    let v = w.right_multiply_reflection(&Root { i, j: i + 1 })?;
                    if !table.contains_key(&v) {
                        table.insert(v.clone(), sw.divided_difference(i)?);
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(table)
}

fn in_staircase(mono: &Monomial, n: usize) -> bool {
    mono.0.iter().enumerate().all(|(i, &e)| (e as usize) <= n - 1 - i)
}

/// Monomials x^a with a_k <= n-k, the standard basis of the coinvariant
/// algebra, in ascending term order.
pub fn staircase_monomials(n: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial(vec![0u32; n])];
    for i in 0..n {
        let mut grown = Vec::new();
        for m in &out {
            for e in 1..=(n - 1 - i) as u32 {
                let mut exps = m.0.clone();
                exps[i] = e;
                grown.push(Monomial(exps));
            }
        }
        out.extend(grown);
    }
    out.sort();
    out
}

/// Normal form modulo the ideal of positive-degree symmetric polynomials.
/// Reduction system: h_{n-k+1}(x_1..x_k) for k = 1..n, whose leading terms
/// x_k^{n-k+1} carve out exactly the staircase basis.  Homogeneous input of
/// degree beyond n(n-1)/2 short-circuits to zero.
pub fn coinvariant_normal_form(p: &MultiPoly) -> MultiPoly {
    let n = p.nvars();
    let top = n * (n - 1) / 2;
    let reducers: Vec<(usize, u32, MultiPoly)> = (1..=n)
        .map(|k| {
            let deg = n - k + 1;
            let h = MultiPoly::complete_homogeneous(n, k, deg).expect("reducer");
            (k, deg as u32, h)
        })
        .collect();
    let mut work = MultiPoly::zero(n);
    for (m, c) in p.iter() {
        if m.degree() <= top {
            work.add_term(m.clone(), c.clone());
        }
    }
    loop {
        let target = work.iter().find_map(|(mono, coeff)| {
            reducers.iter().find_map(|(k, deg, reducer)| {
                if mono.0[k - 1] >= *deg {
                    let mut rest = mono.0.clone();
                    rest[k - 1] -= deg;
                    Some((Monomial(rest), coeff.clone(), reducer.clone()))
                } else {
                    None
                }
            })
        });
        let Some((rest, coeff, reducer)) = target else {
            break;
        };
        // subtract coeff * x^rest * reducer; its leading part cancels the
        // offending term and everything else is lower in the x_k-heavy order
        for (rm, rc) in reducer.iter() {
            work.add_term(rest.mul(rm), -(&coeff * rc));
        }
    }
    debug_assert!(work.iter().all(|(m, _)| in_staircase(m, n)));
    work
}

/// A linear combination of Schubert classes with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertVector {
    n: usize,
    coeffs: BTreeMap<Permutation, BigRational>,
}

impl SchubertVector {
    pub fn zero(n: usize) -> Self {
        SchubertVector { n, coeffs: BTreeMap::new() }
    }

    pub fn single(w: Permutation) -> Self {
        let mut v = Self::zero(w.n());
        v.add_term(w, BigRational::one());
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: BigRational) {
        assert_eq!(w.n(), self.n, "size mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, w: &Permutation) -> BigRational {
        self.coeffs.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.coeffs.keys()
    }

    /// Expands back into a polynomial (a sum of Schubert polynomials).
    pub fn to_poly(&self) -> MultiPoly {
        let mut p = MultiPoly::zero(self.n);
        for (w, c) in &self.coeffs {
            p = &p + &schubert_polynomial(w).scale(c);
        }
        p
    }
}

impl fmt::Display for SchubertVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if abs.is_one() {
                write!(f, "s[{w}]")?;
            } else {
                write!(f, "{abs}*s[{w}]")?;
            }
        }
        Ok(())
    }
}

fn revvar_max(p: &MultiPoly) -> Option<(&Monomial, &BigRational)> {
    p.iter().max_by(|a, b| {
        let (ma, mb) = (a.0, b.0);
        for i in (0..ma.0.len()).rev() {
            match ma.0[i].cmp(&mb.0[i]) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Expands a coinvariant normal form in the Schubert basis by triangular
/// elimination: the extreme monomial of a Schubert polynomial (last
/// variable most significant) is the Lehmer code of its permutation, and
/// codes run over exactly the staircase.
pub fn to_schubert_basis(p: &MultiPoly) -> Result<SchubertVector> {
    let n = p.nvars();
    for (m, _) in p.iter() {
        if !in_staircase(m, n) {
            return Err(Error::Malformed {
                what: "schubert expansion input",
                reason: format!("monomial {:?} outside the staircase; reduce first", m.0),
            });
        }
    }
    let mut rest = p.clone();
    let mut out = SchubertVector::zero(n);
    while !rest.is_zero() {
        let (mono, coeff) = {
            let (m, c) = revvar_max(&rest).expect("nonzero polynomial");
            (m.clone(), c.clone())
        };
        let code: Vec<usize> = mono.0.iter().map(|&e| e as usize).collect();
        let w = Permutation::from_lehmer_code(&code)?;
        let sw = schubert_polynomial(&w);
        let (lead, lead_coeff) = revvar_max(&sw).expect("schubert polynomial nonzero");
        if lead != &mono || !lead_coeff.is_one() {
            return Err(Error::Malformed {
                what: "schubert expansion",
                reason: format!("triangular solve stalled at {:?}", mono.0),
            });
        }
        rest = &rest - &sw.scale(&coeff);
        out.add_term(w, coeff);
    }
    Ok(out)
}

/// The cohomology ring of a minimal-nilpotent Hessenberg variety,
/// presented as the coinvariant algebra modulo the span of Schubert
/// classes at non-fixed permutations.  The surviving classes — one per
/// fixed point — form a basis.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    h: HessFn,
    basis: Vec<Permutation>,
    basis_set: BTreeSet<Permutation>,
}

impl QuotientRing {
    pub fn new(h: &HessFn) -> Result<Self> {
        let basis = betti::fixed_points(h)?;
        let basis_set = basis.iter().cloned().collect();
        Ok(QuotientRing { h: h.clone(), basis, basis_set })
    }

    pub fn h(&self) -> &HessFn {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn basis(&self) -> &[Permutation] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.basis_set.contains(w)
    }

    /// Hilbert series in cohomological degree: one t^{2 length(w)} per
    /// basis class.
    pub fn hilbert_series(&self) -> UniPoly {
        let mut p = UniPoly::zero();
        for w in &self.basis {
            p.add_term(2 * w.length(), BigInt::one());
        }
        p
    }

    fn project(&self, v: SchubertVector) -> SchubertVector {
        let mut out = SchubertVector::zero(self.n());
        for (w, c) in v.iter() {
            if self.contains(w) {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    /// Product of two Schubert class combinations in the quotient ring.
    pub fn multiply(&self, a: &SchubertVector, b: &SchubertVector) -> Result<SchubertVector> {
        if a.n() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), got: a.n() });
        }
        if b.n() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), got: b.n() });
        }
        let product = &a.to_poly() * &b.to_poly();
        let nf = coinvariant_normal_form(&product);
        Ok(self.project(to_schubert_basis(&nf)?))
    }

    /// Product of the classes of two permutations.
    pub fn multiply_classes(&self, u: &Permutation, w: &Permutation) -> Result<SchubertVector> {
        self.multiply(&SchubertVector::single(u.clone()), &SchubertVector::single(w.clone()))
    }

    /// Full structure-constant table over the basis, in lexicographic order
    /// of (u, w).
    pub fn multiplication_table(
        &self,
    ) -> Result<Vec<(Permutation, Permutation, SchubertVector)>> {
        let mut out = Vec::new();
        for u in &self.basis {
            for w in &self.basis {
                out.push((u.clone(), w.clone(), self.multiply_classes(u, w)?));
            }
        }
        Ok(out)
    }
}

/// Verifies the ideal property behind the quotient presentation: the
/// non-fixed set is upward closed in Bruhat order, and every product of a
/// Schubert class with a non-fixed class expands with support in non-fixed
/// classes only (checked in the full coinvariant algebra, no truncation).
pub fn ideal_property_check(h: &HessFn) -> Result<CheckReport> {
    betti::variety_guard(h)?;
    let n = h.n();
    let mut report = CheckReport::new();
    let all: Vec<Permutation> = symgroup::enumerate(n)?.collect();
    let fixed: BTreeSet<Permutation> = betti::fixed_points(h)?.into_iter().collect();

    let mut upward_witness = None;
    'outer: for w in &all {
        if fixed.contains(w) {
            continue;
        }
        for v in &all {
            if fixed.contains(v) && w.bruhat_leq(v) {
                upward_witness = Some(format!("non-fixed {w} below fixed {v}"));
                break 'outer;
            }
        }
    }
    report.record("ideal hypothesis: complement upward closed", upward_witness.is_none(), || {
        upward_witness.clone().unwrap()
    });

    let table = schubert_table(n)?;
    let mut ideal_witness = None;
    'products: for w in &all {
        if fixed.contains(w) {
            continue;
        }
        for u in &all {
            let product = &table[u] * &table[w];
            let expansion = to_schubert_basis(&coinvariant_normal_form(&product))?;
            for v in expansion.support() {
                if fixed.contains(v) {
                    ideal_witness =
                        Some(format!("s[{u}] * s[{w}] meets fixed class s[{v}]"));
                    break 'products;
                }
            }
        }
    }
    report.record("non-fixed span is an ideal", ideal_witness.is_none(), || {
        ideal_witness.clone().unwrap()
    });

    Ok(report)
}

/// Restriction of the equivariant Schubert class of w to the fixed point
/// w itself: the product of t_a - t_b over the inversion roots of w.
pub fn diag_restriction(w: &Permutation) -> MultiPoly {
    let n = w.n();
    let mut p = MultiPoly::one(n);
    for r in w.inversion_roots() {
        let factor = r.to_linear_form().to_poly(n).expect("roots fit n");
        p = &p * &factor;
    }
    p
}

/// Compares GKM kernel dimensions against the free-module prediction
/// P(t) * (1/(1-t^2))^(n-1), degree by degree.
pub fn equivariant_rank_check(h: &HessFn, max_degree: usize, cap: usize) -> Result<CheckReport> {
    let graph = gkm::GkmGraph::hessenberg(h)?;
    let mut report = CheckReport::new();
    for d in 0..=max_degree {
        let kernel = gkm::cochain_dimension(&graph, d, cap)?;
        let series = betti::equivariant_hilbert_coefficient(h, d)?;
        report.record(
            format!("equivariant rank in polynomial degree {d}"),
            kernel == series,
            || format!("kernel dimension {kernel} vs series coefficient {series}"),
        );
    }
    Ok(report)
}

fn vectorize(p: &MultiPoly, basis: &[Monomial]) -> Vec<BigRational> {
    basis.iter().map(|m| p.coeff(m)).collect()
}

fn span_rank(rows: &[Vec<BigRational>]) -> usize {
    rank_int(rows_to_int(rows))
}

/// The n = 3 regression for the alternative generating set of the Springer
/// quotient: elementary symmetric polynomials plus all products of two
/// distinct variables.  Checks that this ideal matches the span of
/// non-fixed Schubert classes degree by degree, and that the quotient
/// Hilbert series is the Springer Poincaré polynomial.
pub fn tanisaki_check() -> Result<CheckReport> {
    let n = 3;
    let h = HessFn::springer(n)?;
    let p_h = betti::poincare(&h)?;
    let top = n * (n - 1) / 2;
    let fixed: BTreeSet<Permutation> = betti::fixed_points(&h)?.into_iter().collect();
    let table = schubert_table(n)?;

    let borel_gens: Vec<MultiPoly> = table
        .iter()
        .filter(|(w, _)| !fixed.contains(w))
        .map(|(_, s)| s.clone())
        .collect();

    let mut alt_gens: Vec<MultiPoly> = (1..=n)
        .map(|k| MultiPoly::elementary_symmetric(n, n, k).expect("e_k"))
        .collect();
    for a in 1..=n {
        for b in a + 1..=n {
            let xa = MultiPoly::var(n, a)?;
            let xb = MultiPoly::var(n, b)?;
            alt_gens.push(&xa * &xb);
        }
    }

    let staircase = staircase_monomials(n);
    let by_degree: Vec<Vec<Monomial>> = (0..=top)
        .map(|d| staircase.iter().filter(|m| m.degree() == d).cloned().collect())
        .collect();

    // degree-d slice of the ideal generated by `gens` inside the
    // coinvariant algebra, as coefficient rows over the staircase basis
    let ideal_rows = |gens: &[MultiPoly], d: usize| -> Vec<Vec<BigRational>> {
        let mut rows = Vec::new();
        for g in gens {
            let Some(gd) = g.homogeneous_degree() else { continue };
            if gd > d {
                continue;
            }
            for m in &by_degree[d - gd] {
                let multiple = &MultiPoly::monomial(n, m.0.clone(), BigRational::one())
                    .expect("staircase monomial")
                    * g;
                let nf = coinvariant_normal_form(&multiple);
                let row = vectorize(&nf, &by_degree[d]);
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        rows
    };

    let mut report = CheckReport::new();
    for (d, degree_slice) in by_degree.iter().enumerate() {
        let borel = ideal_rows(&borel_gens, d);
        let alt = ideal_rows(&alt_gens, d);
        let (rb, ra) = (span_rank(&borel), span_rank(&alt));
        let mut joint = borel.clone();
        joint.extend(alt.clone());
        let rj = span_rank(&joint);
        report.record(
            format!("ideal spans agree in degree {d}"),
            rb == ra && ra == rj,
            || format!("borel rank {rb}, alternative rank {ra}, joint rank {rj}"),
        );
        let quotient_dim = degree_slice.len() - ra;
        let expected = p_h.coeff(2 * d);
        report.record(
            format!("quotient dimension matches Poincaré in degree {d}"),
            BigInt::from(quotient_dim) == expected,
            || format!("quotient dim {quotient_dim} vs coefficient {expected}"),
        );
    }

    // every alternative generator lies in the Borel span
    for (idx, g) in alt_gens.iter().enumerate() {
        let nf = coinvariant_normal_form(g);
        let ok = match nf.homogeneous_degree() {
            None => true, // reduced to zero
            Some(d) => {
                let mut rows = ideal_rows(&borel_gens, d);
                let base = span_rank(&rows);
                rows.push(vectorize(&nf, &by_degree[d]));
                span_rank(&rows) == base
            }
        };
        report.record(
            format!("alternative generator {} lies in the Borel span", idx + 1),
            ok,
            || format!("normal form {nf} escapes the span"),
        );
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hess;
    use crate::poly::poly_from_int_terms;
    use proptest::prelude::*;

    fn word(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn h(values: &[usize]) -> HessFn {
        HessFn::from_values(values.to_vec()).unwrap()
    }

    #[test]
    fn schubert_polynomials_n3_table() {
        let expect = [
            ("1 2 3", poly_from_int_terms(3, &[(1, &[0, 0, 0])])),
            ("2 1 3", poly_from_int_terms(3, &[(1, &[1, 0, 0])])),
            ("1 3 2", poly_from_int_terms(3, &[(1, &[1, 0, 0]), (1, &[0, 1, 0])])),
            ("2 3 1", poly_from_int_terms(3, &[(1, &[1, 1, 0])])),
            ("3 1 2", poly_from_int_terms(3, &[(1, &[2, 0, 0])])),
            ("3 2 1", poly_from_int_terms(3, &[(1, &[2, 1, 0])])),
        ];
        let table = schubert_table(3).unwrap();
        for (w, p) in expect {
            let w = word(w);
            assert_eq!(schubert_polynomial(&w), p, "w = {w}");
            assert_eq!(table[&w], p, "table at {w}");
        }
    }

    #[test]
    fn table_matches_pointwise_construction() {
        // different divided-difference paths, same polynomials
        for n in 2..=5 {
            let table = schubert_table(n).unwrap();
            assert_eq!(table.len(), symgroup::order(n));
            for (w, p) in &table {
                assert_eq!(&schubert_polynomial(w), p, "w = {w}");
            }
        }
    }

    #[test]
    fn schubert_degree_and_leading_monomial() {
        for n in 2..=5 {
            for w in symgroup::enumerate(n).unwrap() {
                let s = schubert_polynomial(&w);
                assert_eq!(s.homogeneous_degree(), Some(w.length()), "w = {w}");
                assert!(s.iter().all(|(m, _)| in_staircase(m, n)), "w = {w}");
                let (lead, c) = revvar_max(&s).unwrap();
                let code: Vec<usize> = lead.0.iter().map(|&e| e as usize).collect();
                assert_eq!(code, w.lehmer_code(), "w = {w}");
                assert!(c.is_one(), "w = {w}");
            }
        }
    }

    #[test]
    fn divided_difference_recursion_on_schuberts() {
        for w in symgroup::enumerate(4).unwrap() {
            for i in 1..4 {
                if w.apply(i) > w.apply(i + 1) {
                    let v = w.right_multiply_reflection(&Root { i, j: i + 1 }).unwrap();
                    assert_eq!(
                        schubert_polynomial(&w).divided_difference(i).unwrap(),
                        schubert_polynomial(&v),
                        "w = {w}, i = {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn staircase_counts_match_coinvariant_hilbert_series() {
        for n in 2..=5usize {
            let staircase = staircase_monomials(n);
            assert_eq!(staircase.len(), symgroup::order(n));
            // degreewise: coefficients of prod_k (1 + t + ... + t^{k-1})
            let mut series = UniPoly::one();
            for k in 1..=n {
                series = &series * &UniPoly::truncated_geometric(k - 1);
            }
            for d in 0..=n * (n - 1) / 2 {
                let count = staircase.iter().filter(|m| m.degree() == d).count();
                assert_eq!(BigInt::from(count), series.coeff(d), "n = {n}, degree {d}");
            }
        }
    }

    #[test]
    fn normal_form_kills_symmetric_generators() {
        for n in 2..=5 {
            for k in 1..=n {
                let e = MultiPoly::elementary_symmetric(n, n, k).unwrap();
                assert!(coinvariant_normal_form(&e).is_zero(), "e_{k}, n = {n}");
            }
        }
    }

    #[test]
    fn normal_form_fixtures() {
        // x2 x3 = x1^2 modulo the symmetric ideal for n = 3
        let p = poly_from_int_terms(3, &[(1, &[0, 1, 1])]);
        assert_eq!(coinvariant_normal_form(&p), poly_from_int_terms(3, &[(1, &[2, 0, 0])]));
        // x1 x3 = -x1^2 - x1 x2
        let q = poly_from_int_terms(3, &[(1, &[1, 0, 1])]);
        assert_eq!(
            coinvariant_normal_form(&q),
            poly_from_int_terms(3, &[(-1, &[2, 0, 0]), (-1, &[1, 1, 0])])
        );
        // degree above the top short-circuits to zero
        let high = poly_from_int_terms(3, &[(5, &[4, 0, 0])]);
        assert!(coinvariant_normal_form(&high).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_schuberts_are_reduced() {
        for w in symgroup::enumerate(4).unwrap() {
            let s = schubert_polynomial(&w);
            assert_eq!(coinvariant_normal_form(&s), s, "w = {w}");
        }
    }

    #[test]
    fn schubert_expansion_round_trip() {
        for n in 2..=4 {
            for w in symgroup::enumerate(n).unwrap() {
                let v = to_schubert_basis(&schubert_polynomial(&w)).unwrap();
                assert_eq!(v, SchubertVector::single(w.clone()), "w = {w}");
            }
        }
        // a non-trivial inhomogeneous case
        let p = poly_from_int_terms(3, &[(1, &[2, 1, 0]), (1, &[1, 1, 0]), (1, &[0, 1, 0])]);
        let v = to_schubert_basis(&p).unwrap();
        assert_eq!(v.to_string(), "s[1 3 2] - s[2 1 3] + s[2 3 1] + s[3 2 1]");
        let back = coinvariant_normal_form(&v.to_poly());
        assert_eq!(back, p);
    }

    #[test]
    fn schubert_expansion_rejects_unreduced_input() {
        let p = poly_from_int_terms(3, &[(1, &[0, 0, 2])]);
        assert!(matches!(to_schubert_basis(&p), Err(Error::Malformed { .. })));
    }

    #[test]
    fn quotient_ring_springer_n3() {
        let ring = QuotientRing::new(&h(&[1, 2, 3])).unwrap();
        assert_eq!(ring.dimension(), 3);
        assert_eq!(ring.hilbert_series(), UniPoly::from_coeffs(&[1i64, 0, 2]));
        // every product of positive-degree classes vanishes: the ring is
        // 1 + 2 nilpotents in degree 2
        for u in ["2 1 3", "1 3 2"] {
            for v in ["2 1 3", "1 3 2"] {
                let prod = ring.multiply_classes(&word(u), &word(v)).unwrap();
                assert!(prod.is_zero(), "{u} * {v} = {prod}");
            }
        }
    }

    #[test]
    fn quotient_ring_h233() {
        let ring = QuotientRing::new(&h(&[2, 3, 3])).unwrap();
        assert_eq!(ring.dimension(), 5);
        let s1 = word("2 1 3");
        let s2 = word("1 3 2");
        let prod = ring.multiply_classes(&s1, &s2).unwrap();
        assert_eq!(prod.to_string(), "s[2 3 1] + s[3 1 2]");
        let sq = ring.multiply_classes(&s1, &s1).unwrap();
        assert_eq!(sq.to_string(), "s[3 1 2]");
        let sq2 = ring.multiply_classes(&s2, &s2).unwrap();
        assert_eq!(sq2.to_string(), "s[2 3 1]");
        // degree-3 products leave the fixed set (3 2 1 is not a vertex)
        let top = ring.multiply(&prod, &SchubertVector::single(s1)).unwrap();
        assert!(top.is_zero());
    }

    #[test]
    fn quotient_multiplication_is_commutative_and_unital() {
        let ring = QuotientRing::new(&h(&[2, 3, 3])).unwrap();
        let id = word("1 2 3");
        for u in ring.basis().to_vec() {
            assert_eq!(
                ring.multiply_classes(&id, &u).unwrap(),
                SchubertVector::single(u.clone())
            );
            for v in ring.basis().to_vec() {
                assert_eq!(
                    ring.multiply_classes(&u, &v).unwrap(),
                    ring.multiply_classes(&v, &u).unwrap()
                );
            }
        }
    }

    #[test]
    fn quotient_multiplication_associates_on_samples() {
        let ring = QuotientRing::new(&h(&[2, 3, 3])).unwrap();
        let basis = ring.basis().to_vec();
        for u in &basis {
            for v in &basis {
                for w in &basis {
                    let uv = ring.multiply_classes(u, v).unwrap();
                    let vw = ring.multiply_classes(v, w).unwrap();
                    let lhs = ring.multiply(&uv, &SchubertVector::single(w.clone())).unwrap();
                    let rhs = ring.multiply(&SchubertVector::single(u.clone()), &vw).unwrap();
                    assert_eq!(lhs, rhs, "({u})({v})({w})");
                }
            }
        }
    }

    #[test]
    fn hilbert_series_equals_poincare_small() {
        for n in 2..=4 {
            for f in hess::enumerate(n).unwrap() {
                let ring = QuotientRing::new(&f).unwrap();
                assert_eq!(ring.hilbert_series(), betti::poincare(&f).unwrap(), "h = {f}");
                assert_eq!(
                    BigInt::from(ring.dimension()),
                    betti::euler_number(&f).unwrap(),
                    "h = {f}"
                );
            }
        }
    }

    #[test]
    fn ideal_property_small() {
        for n in 2..=4 {
            for f in hess::enumerate(n).unwrap() {
                let report = ideal_property_check(&f).unwrap();
                assert!(report.passed(), "h = {f}:\n{report}");
            }
        }
    }

    #[test]
    fn diag_restriction_fixtures() {
        assert_eq!(diag_restriction(&word("1 2 3")), MultiPoly::one(3));
        assert_eq!(
            diag_restriction(&word("2 1 3")),
            poly_from_int_terms(3, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0])])
        );
        let w0 = Permutation::longest(3);
        let p = diag_restriction(&w0);
        assert_eq!(p.homogeneous_degree(), Some(3));
        // (t1-t2)(t1-t3)(t2-t3)
        let manual = &(&poly_from_int_terms(3, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0])])
            * &poly_from_int_terms(3, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]))
            * &poly_from_int_terms(3, &[(1, &[0, 1, 0]), (-1, &[0, 0, 1])]);
        assert_eq!(p, manual);
    }

    #[test]
    fn diag_restriction_divisible_along_downward_edges() {
        // at each flag vertex, the restriction is divisible by the label of
        // every edge to a shorter neighbor
        for n in 2..=4usize {
            for w in symgroup::enumerate(n).unwrap() {
                let restriction = diag_restriction(&w);
                for r in crate::rootsys::positive_roots(n) {
                    let v = w.right_multiply_reflection(&r).unwrap();
                    if v.length() < w.length() {
                        let label = w.act_on_root(&r).unwrap().to_linear_form().canonical();
                        assert!(
                            restriction.substitute_equal(label.a, label.b).unwrap().is_zero(),
                            "w = {w}, root {r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tanisaki_regression() {
        let report = tanisaki_check().unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.items.len() >= 10);
    }

    #[test]
    fn equivariant_rank_check_n3() {
        for f in hess::enumerate(3).unwrap() {
            let report = equivariant_rank_check(&f, 3, gkm::DEFAULT_DEGREE_CAP).unwrap();
            assert!(report.passed(), "h = {f}:\n{report}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        // normal form is multiplicative: NF(p q) = NF(NF(p) NF(q))
        #[test]
        fn normal_form_respects_products(
            a in proptest::collection::vec((-3i64..=3, proptest::collection::vec(0u32..=2, 3)), 1..4),
            b in proptest::collection::vec((-3i64..=3, proptest::collection::vec(0u32..=2, 3)), 1..4),
        ) {
            let build = |terms: &[(i64, Vec<u32>)]| {
                let mut p = MultiPoly::zero(3);
                for (c, e) in terms {
                    p.add_term(Monomial(e.clone()), BigRational::from_integer(BigInt::from(*c)));
                }
                p
            };
            let (pa, pb) = (build(&a), build(&b));
            let direct = coinvariant_normal_form(&(&pa * &pb));
            let staged = coinvariant_normal_form(
                &(&coinvariant_normal_form(&pa) * &coinvariant_normal_form(&pb)),
            );
            prop_assert_eq!(direct, staged);
        }
    }
}
