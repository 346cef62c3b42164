//! Permutations in one-line notation, inversion statistics, Lehmer codes,
//! Bruhat order via the rank-matrix criterion, and the right action of
//! reflections.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::hess::guard;
use crate::rootsys::Root;

/// A permutation of {1..n} in one-line notation: `word[i-1] = w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// The longest element n, n-1, ..., 1.
    pub fn longest(n: usize) -> Self {
        Permutation { word: (1..=n).rev().collect() }
    }

    pub fn from_word(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::InvalidWord { word, reason: "empty word".into() });
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidWord {
                    word: word.clone(),
                    reason: format!("value {v} outside 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::InvalidWord {
                    word: word.clone(),
                    reason: format!("value {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// w(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.word.len(), "argument {i} out of range");
        self.word[i - 1]
    }

    /// The position of a value: w^{-1}(v), 1-based.
    pub fn position_of(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.word.len(), "value {v} out of range");
        self.word.iter().position(|&x| x == v).unwrap() + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (idx, &v) in self.word.iter().enumerate() {
            word[v - 1] = idx + 1;
        }
        Permutation { word }
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "size mismatch");
        Permutation { word: other.word.iter().map(|&v| self.word[v - 1]).collect() }
    }

    /// Number of inversions = Coxeter length.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.word[a] > self.word[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inversion roots {(a, b) : a < b, position of a comes after position
    /// of b}, sorted lexicographically.
    pub fn inversion_roots(&self) -> Vec<Root> {
        let inv = self.inverse();
        let n = self.n();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if inv.apply(a) > inv.apply(b) {
                    out.push(Root { i: a, j: b });
                }
            }
        }
        out
    }

    /// Lehmer code: code[i-1] = #{j > i : w(j) < w(i)}.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.word[j] < self.word[i]).count())
            .collect()
    }

    /// Rebuilds a permutation from its Lehmer code: w(i) is the
    /// (code[i-1] + 1)-th smallest unused value.
    pub fn from_lehmer_code(code: &[usize]) -> Result<Self> {
        let n = code.len();
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for (idx, &c) in code.iter().enumerate() {
            if c >= pool.len() {
                return Err(Error::InvalidWord {
                    word: code.to_vec(),
                    reason: format!("code entry {c} at position {} too large", idx + 1),
                });
            }
            word.push(pool.remove(c));
        }
        Ok(Permutation { word })
    }

    /// Smallest position i with w(i) < w(i+1), if any (the identity-free
    /// way of saying "not yet the longest element").
    pub fn smallest_ascent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.word[i - 1] < self.word[i])
    }

    /// Smallest position i with w(i) > w(i+1), if any.
    pub fn smallest_descent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.word[i - 1] > self.word[i])
    }

    /// Right multiplication by the reflection of a positive root (i, j):
    /// swaps the entries in positions i and j.
    pub fn right_multiply_reflection(&self, r: &Root) -> Result<Permutation> {
        if !r.is_positive() {
            return Err(Error::NotPositive { i: r.i, j: r.j });
        }
        if r.j > self.n() {
            return Err(Error::InvalidRoot { i: r.i, j: r.j, reason: format!("exceeds n = {}", self.n()) });
        }
        let mut word = self.word.clone();
        word.swap(r.i - 1, r.j - 1);
        Ok(Permutation { word })
    }

    /// The image of a root under w: (i, j) goes to (w(i), w(j)).
    pub fn act_on_root(&self, r: &Root) -> Result<Root> {
        if r.i > self.n() || r.j > self.n() {
            return Err(Error::InvalidRoot { i: r.i, j: r.j, reason: format!("exceeds n = {}", self.n()) });
        }
        Root::new(self.apply(r.i), self.apply(r.j))
    }

    /// Rank matrix r[p][q] = #{k <= p : w(k) >= q+1} for p, q in 0..n.
    fn rank_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut rows = Vec::with_capacity(n);
        let mut row = vec![0usize; n];
        for &wp in &self.word {
            // step p adds 1 exactly at the columns q with w(p) >= q + 1
            for cell in row.iter_mut().take(wp) {
                *cell += 1;
            }
            rows.push(row.clone());
        }
        rows
    }

    /// Bruhat order via the rank-matrix criterion: u <= v iff every prefix
    /// of u contains at most as many large values as the same prefix of v.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let (ru, rv) = (self.rank_matrix(), other.rank_matrix());
        for p in 0..self.n() {
            for q in 0..self.n() {
                if ru[p][q] > rv[p][q] {
                    return false;
                }
            }
        }
        true
    }

    pub fn bruhat_less(&self, other: &Permutation) -> bool {
        self != other && self.bruhat_leq(other)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|part| part.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidWord {
                word: Vec::new(),
                reason: format!("unparseable word {s:?}: {e}"),
            })?;
        Permutation::from_word(word)
    }
}

/// All of S_n in lexicographic order of one-line words; guarded at
/// n <= ENUMERATION_GUARD.
pub fn enumerate(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    guard(n)?;
    Ok((1..=n).permutations(n).map(|word| Permutation { word }))
}

/// The number of elements |S_n|.
pub fn order(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hess::ENUMERATION_GUARD;
    use std::collections::BTreeSet;

    fn p(word: &[usize]) -> Permutation {
        Permutation::from_word(word.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Permutation::from_word(vec![]).is_err());
        assert!(Permutation::from_word(vec![1, 1]).is_err());
        assert!(Permutation::from_word(vec![0, 1]).is_err());
        assert!(Permutation::from_word(vec![1, 3]).is_err());
        assert!(Permutation::from_word(vec![2, 3, 1]).is_ok());
    }

    #[test]
    fn basic_operations() {
        let w = p(&[2, 3, 1]);
        assert_eq!(w.apply(1), 2);
        assert_eq!(w.position_of(1), 3);
        assert_eq!(w.inverse(), p(&[3, 1, 2]));
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(3));
        assert_eq!(w.length(), 2);
        assert_eq!(Permutation::longest(4).length(), 6);
        assert_eq!(w.to_string(), "2 3 1");
        assert_eq!("2 3 1".parse::<Permutation>().unwrap(), w);
    }

    #[test]
    fn inversion_roots_example() {
        assert_eq!(p(&[2, 1, 3]).inversion_roots(), vec![Root { i: 1, j: 2 }]);
        let w0 = Permutation::longest(3);
        assert_eq!(w0.inversion_roots().len(), 3);
        assert!(Permutation::identity(5).inversion_roots().is_empty());
    }

    #[test]
    fn lehmer_code_round_trip() {
        for w in enumerate(5).unwrap() {
            let code = w.lehmer_code();
            assert_eq!(code.iter().sum::<usize>(), w.length());
            assert_eq!(Permutation::from_lehmer_code(&code).unwrap(), w);
        }
        assert!(Permutation::from_lehmer_code(&[2, 0]).is_err());
    }

    #[test]
    fn reflection_action() {
        let w = p(&[2, 1, 3]);
        let r = Root::new(1, 2).unwrap();
        assert_eq!(w.act_on_root(&r).unwrap(), Root::new(2, 1).unwrap());
        assert_eq!(w.right_multiply_reflection(&r).unwrap(), p(&[1, 2, 3]));
        assert!(w.right_multiply_reflection(&Root::new(2, 1).unwrap()).is_err());

        let w = p(&[2, 3, 1]);
        assert_eq!(w.act_on_root(&Root::new(1, 3).unwrap()).unwrap(), Root::new(2, 1).unwrap());
    }

    #[test]
    fn enumeration_lex_order_and_count() {
        let all: Vec<Permutation> = enumerate(4).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all.first().unwrap(), &Permutation::identity(4));
        assert_eq!(all.last().unwrap(), &Permutation::longest(4));
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert!(enumerate(ENUMERATION_GUARD + 1).is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(p(&[2, 1, 3]).bruhat_leq(&p(&[2, 3, 1])));
        assert!(!p(&[2, 3, 1]).bruhat_leq(&p(&[2, 1, 3])));
        // a classic incomparable pair
        assert!(!p(&[2, 3, 1]).bruhat_leq(&p(&[3, 1, 2])));
        assert!(!p(&[3, 1, 2]).bruhat_leq(&p(&[2, 3, 1])));
    }

    /// Independent Bruhat oracle: the lower interval [e, v] equals the set
    /// of products of subwords of any fixed reduced word of v.
    fn bruhat_down_set(v: &Permutation) -> BTreeSet<Permutation> {
        let n = v.n();
        // reduced word by repeatedly removing the smallest descent
        let mut letters = Vec::new();
        let mut u = v.clone();
        while let Some(i) = u.smallest_descent() {
            letters.push(i);
            u = u.right_multiply_reflection(&Root::new(i, i + 1).unwrap()).unwrap();
        }
        letters.reverse(); // v = s_{letters[0]} ... s_{letters[k-1]} as a reduced word
        let mut set = BTreeSet::new();
        let k = letters.len();
        for mask in 0u32..(1 << k) {
            let mut prod = Permutation::identity(n);
            for (idx, &i) in letters.iter().enumerate() {
                if mask & (1 << idx) != 0 {
                    let s = {
                        let mut word: Vec<usize> = (1..=n).collect();
                        word.swap(i - 1, i);
                        Permutation { word }
                    };
                    prod = prod.compose(&s);
                }
            }
            set.insert(prod);
        }
        set
    }

    #[test]
    fn bruhat_matches_subword_oracle() {
        for n in 2..=4 {
            let all: Vec<Permutation> = enumerate(n).unwrap().collect();
            for v in &all {
                let down = bruhat_down_set(v);
                for u in &all {
                    assert_eq!(
                        u.bruhat_leq(v),
                        down.contains(u),
                        "mismatch for u = {u}, v = {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn bruhat_partial_order_properties() {
        let all: Vec<Permutation> = enumerate(4).unwrap().collect();
        let id = Permutation::identity(4);
        let w0 = Permutation::longest(4);
        for u in &all {
            assert!(u.bruhat_leq(u));
            assert!(id.bruhat_leq(u));
            assert!(u.bruhat_leq(&w0));
            for v in &all {
                if u.bruhat_less(v) {
                    assert!(u.length() < v.length(), "{u} < {v} but lengths disagree");
                    assert!(!v.bruhat_leq(u));
                }
            }
        }
    }
}
