//! Fixed points and Betti-number data of the minimal-nilpotent Hessenberg
//! variety attached to a Hessenberg function: the closed-form Poincaré
//! polynomial, its brute-force oracle, Euler numbers, dimension, and the
//! structural sanity checks that accompany them.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, One};

use crate::error::{Error, Result};
use crate::hess::{guard, HessFn};
use crate::poly::UniPoly;
use crate::report::CheckReport;
use crate::rootsys;
use crate::symgroup::{self, Permutation};

/// Guard for operations on the variety itself: the highest root needs
/// n >= 2, enumeration needs n within the global cap.
pub(crate) fn variety_guard(h: &HessFn) -> Result<()> {
    let n = h.n();
    if n < 2 {
        return Err(Error::UnsupportedRank { n, min: 2, max: crate::hess::ENUMERATION_GUARD });
    }
    guard(n)
}

/// Torus fixed-point criterion: x_w lies in the variety iff the position of
/// the value 1 is weakly below h at the position of the value n.
pub fn is_fixed_point(h: &HessFn, w: &Permutation) -> bool {
    debug_assert_eq!(h.n(), w.n());
    let n = h.n();
    w.position_of(1) <= h.value(w.position_of(n))
}

/// All torus fixed points, in lexicographic order of one-line words.
pub fn fixed_points(h: &HessFn) -> Result<Vec<Permutation>> {
    variety_guard(h)?;
    Ok(symgroup::enumerate(h.n())?.filter(|w| is_fixed_point(h, w)).collect())
}

/// Box-counting coefficients q(0), ..., q(2n-3): q(i) counts stair-shape
/// boxes (k, j) with 2 <= k <= h(n+1-j) and j + k - 3 = i.
pub fn q_values(h: &HessFn) -> Result<Vec<usize>> {
    variety_guard(h)?;
    let n = h.n();
    let mut q = vec![0usize; 2 * n - 2];
    for j in 1..=n {
        for k in 2..=h.value(n + 1 - j) {
            q[j + k - 3] += 1;
        }
    }
    Ok(q)
}

/// q as a polynomial in cohomological degree (coefficient q(i) on t^{2i}).
pub fn q_poly(h: &HessFn) -> Result<UniPoly> {
    let q = q_values(h)?;
    let mut p = UniPoly::zero();
    for (i, &c) in q.iter().enumerate() {
        p.add_term(i, BigInt::from(c));
    }
    Ok(p.doubled_degrees())
}

/// Closed-form Poincaré polynomial in cohomological degree:
/// q(t) times the product of truncated geometric factors of lengths
/// 1, ..., n-3.
pub fn poincare(h: &HessFn) -> Result<UniPoly> {
    let q = q_values(h)?;
    let n = h.n();
    let mut p = UniPoly::zero();
    for (i, &c) in q.iter().enumerate() {
        p.add_term(i, BigInt::from(c));
    }
    for l in 1..=n.saturating_sub(3) {
        p = &p * &UniPoly::truncated_geometric(l);
    }
    Ok(p.doubled_degrees())
}

/// Brute-force oracle: sum of t^{2 length(w)} over the fixed points.
pub fn poincare_bruteforce(h: &HessFn) -> Result<UniPoly> {
    let mut p = UniPoly::zero();
    for w in fixed_points(h)? {
        p.add_term(2 * w.length(), BigInt::one());
    }
    Ok(p)
}

/// Complex dimension of the variety:
/// (n-1)(n-2)/2 + max_j (h(j) - j).
pub fn dimension(h: &HessFn) -> Result<usize> {
    variety_guard(h)?;
    let n = h.n();
    let excess = (1..=n).map(|j| h.value(j) - j).max().unwrap_or(0);
    Ok((n - 1) * (n - 2) / 2 + excess)
}

/// Codimension inside the full flag variety.
pub fn codimension(h: &HessFn) -> Result<usize> {
    let n = h.n();
    Ok(n * (n - 1) / 2 - dimension(h)?)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Type A Euler number: (n-2)! (dim H - n + 1).
pub fn euler_number(h: &HessFn) -> Result<BigInt> {
    variety_guard(h)?;
    let n = h.n();
    Ok(factorial(n - 2) * BigInt::from(h.dim_h() - n + 1))
}

/// Euler number of a minimal-nilpotent Hessenberg variety for any
/// simply-laced group, from the Weyl-group order, the group dimension, the
/// rank and the Hessenberg-space dimension:
/// |W| (dim H - rank) / (dim G - rank).
/// Returned as an exact rational; the caller asserts integrality when a
/// specialization demands it.
pub fn euler_simply_laced(
    weyl_order: &BigInt,
    dim_g: usize,
    rank: usize,
    dim_h: usize,
) -> BigRational {
    let num = weyl_order * BigInt::from(dim_h as i64 - rank as i64);
    BigRational::new(num, BigInt::from(dim_g as i64 - rank as i64))
}

/// Coefficient of t^{2d} in P(t) * (1/(1-t^2))^(n-1) — the rank of the
/// degree-2d piece of the free module predicted by the equivariant theory.
pub fn equivariant_hilbert_coefficient(h: &HessFn, d: usize) -> Result<usize> {
    let p = poincare(h)?;
    let n = h.n();
    let mut total = 0usize;
    for j in 0..=d {
        let pj: BigInt = p.coeff(2 * j);
        let pj = usize::try_from(&pj).expect("Poincaré coefficient fits usize");
        // number of degree-(d-j) monomials in n-1 variables
        total += pj * binomial(d - j + n - 2, n - 2);
    }
    Ok(total)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// First Bruhat-downward-closure violation in `members`: a member w and a
/// shorter w·t (t a transposition) outside the set.  By the
/// reflection-chain property of Bruhat order this detects any violation of
/// downward closure proper, in time linear in the set rather than
/// quadratic; the tests compare against the two-sided definition directly.
pub(crate) fn downward_closure_witness(
    n: usize,
    members: &BTreeSet<Permutation>,
) -> Option<(Permutation, Permutation)> {
    let roots = rootsys::positive_roots(n);
    for w in members {
        let len = w.length();
        for r in &roots {
            let v = w.right_multiply_reflection(r).expect("positive root in range");
            if v.length() < len && !members.contains(&v) {
                return Some((w.clone(), v));
            }
        }
    }
    None
}

/// Structural facts that must hold for every valid Hessenberg function:
/// every maximal-parabolic Weyl subgroup sits inside the fixed-point set,
/// the codimension is at most n-1, and the complement of the fixed-point
/// set is upward closed in Bruhat order.
pub fn structural_checks(h: &HessFn) -> Result<CheckReport> {
    variety_guard(h)?;
    let n = h.n();
    let mut report = CheckReport::new();
    let all: Vec<Permutation> = symgroup::enumerate(n)?.collect();
    let fixed: Vec<bool> = all.iter().map(|w| is_fixed_point(h, w)).collect();

    // (1) For each i, the subgroup of permutations preserving {1..i}
    // (generated by all simple reflections except s_i) is fixed pointwise.
    let mut parabolic_witness = None;
    'outer: for i in 1..n {
        for (w, &is_fixed) in all.iter().zip(&fixed) {
            let preserves_block = (1..=i).all(|v| w.position_of(v) <= i);
            if preserves_block && !is_fixed {
                parabolic_witness = Some(format!("i = {i}, w = {w}"));
                break 'outer;
            }
        }
    }
    report.record("parabolic subgroups fixed", parabolic_witness.is_none(), || {
        parabolic_witness.clone().unwrap()
    });

    // (2) codim <= n - 1.
    let codim = codimension(h)?;
    report.record("codimension at most n-1", codim < n, || {
        format!("codim = {codim}")
    });

    // (3) The non-fixed set is upward closed in Bruhat order, i.e. the
    // fixed set is downward closed.
    let fixed_set: BTreeSet<Permutation> = all
        .iter()
        .zip(&fixed)
        .filter(|(_, &f)| f)
        .map(|(w, _)| w.clone())
        .collect();
    let violation = downward_closure_witness(n, &fixed_set);
    report.record("complement upward closed", violation.is_none(), || {
        let (w, v) = violation.clone().unwrap();
        format!("non-fixed {v} below fixed {w}")
    });

    Ok(report)
}
