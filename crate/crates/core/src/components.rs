//! Irreducible components of the minimal-nilpotent Hessenberg variety:
//! the corner construction on the modified stair shape, the associated
//! longest permutations, and the Bruhat-maximality oracle.

use crate::error::{Error, Result};
use crate::hess::{Corner, HessFn};
use crate::rootsys::Root;
use crate::betti;
use crate::symgroup::Permutation;

/// One irreducible component: its defining corner, the Bruhat-maximal
/// fixed point it closes up, and its complex dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub corner: Corner,
    pub word: Permutation,
    pub dimension: usize,
}

/// The longest permutation w with w(i) = 1 and w(j) = n for the root
/// beta = (i, j): the remaining positions carry n-1, n-2, ..., 2 from left
/// to right.
pub fn w_beta(n: usize, beta: &Root) -> Result<Permutation> {
    if n < 2 {
        return Err(Error::UnsupportedRank { n, min: 2, max: usize::MAX });
    }
    if beta.i > n || beta.j > n {
        return Err(Error::InvalidRoot {
            i: beta.i,
            j: beta.j,
            reason: format!("exceeds n = {n}"),
        });
    }
    let mut word = vec![0usize; n];
    word[beta.i - 1] = 1;
    word[beta.j - 1] = n;
    let mut next = n - 1;
    for slot in word.iter_mut() {
        if *slot == 0 {
            *slot = next;
            next -= 1;
        }
    }
    Permutation::from_word(word)
}

/// Components from the corner construction, in corner (column) order.
pub fn components(h: &HessFn) -> Result<Vec<Component>> {
    betti::variety_guard(h)?;
    let n = h.n();
    h.corners()
        .into_iter()
        .map(|corner| {
            let beta = Root::new(corner.row, corner.col)?;
            let word = w_beta(n, &beta)?;
            let dimension = word.length();
            Ok(Component { corner, word, dimension })
        })
        .collect()
}

/// Oracle: the Bruhat-maximal elements of the fixed-point set, sorted
/// lexicographically.  Processing by descending length lets each candidate
/// be tested against the maxima found so far (anything dominating it
/// dominates through one of them).
pub fn components_bruteforce(h: &HessFn) -> Result<Vec<Permutation>> {
    let mut fixed = betti::fixed_points(h)?;
    fixed.sort_by_key(|w| std::cmp::Reverse(w.length()));
    let mut maxima: Vec<Permutation> = Vec::new();
    for w in fixed {
        if !maxima.iter().any(|m| w.bruhat_leq(m)) {
            maxima.push(w);
        }
    }
    maxima.sort();
    Ok(maxima)
}

/// Compares the corner construction against the oracle, as sets of words.
pub fn components_match_oracle(h: &HessFn) -> Result<bool> {
    let mut from_corners: Vec<Permutation> =
        components(h)?.into_iter().map(|c| c.word).collect();
    from_corners.sort();
    Ok(from_corners == components_bruteforce(h)?)
}

/// True when no component word lies below another in Bruhat order.
pub fn pairwise_incomparable(h: &HessFn) -> Result<bool> {
    let words: Vec<Permutation> = components(h)?.into_iter().map(|c| c.word).collect();
    for (a, u) in words.iter().enumerate() {
        for v in words.iter().skip(a + 1) {
            if u.bruhat_leq(v) || v.bruhat_leq(u) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hess;

    fn h(values: &[usize]) -> HessFn {
        HessFn::from_values(values.to_vec()).unwrap()
    }

    fn word(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn w_beta_examples() {
        assert_eq!(w_beta(4, &Root::new(1, 4).unwrap()).unwrap(), word("1 3 2 4"));
        assert_eq!(w_beta(4, &Root::new(4, 1).unwrap()).unwrap(), word("4 3 2 1"));
        assert_eq!(w_beta(8, &Root::new(2, 1).unwrap()).unwrap(), word("8 1 7 6 5 4 3 2"));
        assert_eq!(w_beta(3, &Root::new(1, 2).unwrap()).unwrap(), word("1 3 2"));
        assert!(w_beta(3, &Root::new(1, 4).unwrap()).is_err());
    }

    #[test]
    fn w_beta_is_bruhat_maximal_with_its_constraints() {
        // w_beta is the longest permutation with 1 in position i and n in
        // position j; check by brute force for n <= 5.
        for n in 2..=5usize {
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let beta = Root::new(i, j).unwrap();
                    let wb = w_beta(n, &beta).unwrap();
                    for w in crate::symgroup::enumerate(n).unwrap() {
                        if w.apply(i) == 1 && w.apply(j) == n {
                            assert!(w.bruhat_leq(&wb), "n={n} beta=({i},{j}) w={w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn same_sign_roots_reverse_order() {
        // For roots of the same sign, beta <= gamma iff w_gamma <= w_beta.
        for n in 2..=5usize {
            let pos = crate::rootsys::positive_roots(n);
            let neg: Vec<Root> = pos.iter().map(|r| r.negated()).collect();
            for block in [pos, neg] {
                for b in &block {
                    for g in &block {
                        let lhs = crate::rootsys::root_leq(b, g, n).unwrap();
                        let rhs = w_beta(n, g).unwrap().bruhat_leq(&w_beta(n, b).unwrap());
                        assert_eq!(lhs, rhs, "n={n} beta={b} gamma={g}");
                    }
                }
            }
        }
    }

    #[test]
    fn simple_roots_strictly_below_their_negatives() {
        for n in 2..=6usize {
            for alpha in crate::rootsys::simple_roots(n) {
                let w_pos = w_beta(n, &alpha).unwrap();
                let w_neg = w_beta(n, &alpha.negated()).unwrap();
                assert!(w_pos.bruhat_less(&w_neg), "n={n} alpha={alpha}");
            }
        }
    }

    #[test]
    fn four_component_fixture_n8() {
        let f = h(&[2, 2, 3, 5, 6, 6, 7, 8]);
        let comps = components(&f).unwrap();
        let words: Vec<String> = comps.iter().map(|c| c.word.to_string()).collect();
        assert_eq!(
            words,
            vec![
                "8 1 7 6 5 4 3 2",
                "7 6 5 8 1 4 3 2",
                "7 6 5 4 8 1 3 2",
                "7 6 5 4 3 2 1 8",
            ]
        );
        // top component dimension equals the variety dimension
        let dim = betti::dimension(&f).unwrap();
        assert_eq!(comps.iter().map(|c| c.dimension).max(), Some(dim));
    }

    #[test]
    fn springer_components_n3() {
        let comps = components(&h(&[1, 2, 3])).unwrap();
        let words: Vec<String> = comps.iter().map(|c| c.word.to_string()).collect();
        assert_eq!(words, vec!["1 3 2", "2 1 3"]);
        assert_eq!(comps[0].dimension, 1);
        assert_eq!(comps[1].dimension, 1);
    }

    #[test]
    fn matches_oracle_small() {
        for n in 2..=5 {
            for f in hess::enumerate(n).unwrap() {
                assert!(components_match_oracle(&f).unwrap(), "h = {f}");
                assert!(pairwise_incomparable(&f).unwrap(), "h = {f}");
            }
        }
    }

    #[test]
    fn component_count_equals_corner_count() {
        for f in hess::enumerate(5).unwrap() {
            assert_eq!(components(&f).unwrap().len(), f.corners().len());
        }
    }

    #[test]
    fn max_component_dimension_is_variety_dimension() {
        for n in 2..=5 {
            for f in hess::enumerate(n).unwrap() {
                let comps = components(&f).unwrap();
                assert_eq!(
                    comps.iter().map(|c| c.dimension).max(),
                    Some(betti::dimension(&f).unwrap()),
                    "h = {f}"
                );
            }
        }
    }
}
