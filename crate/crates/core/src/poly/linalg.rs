//! Exact rank computations for the small dense systems that show up in GKM
//! kernel dimensions and ideal-span comparisons.  Fraction-free (Bareiss)
//! elimination over the integers is the main path; a plain rational
//! elimination doubles as the cross-check oracle in tests.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// Rank of an integer matrix via fraction-free Gaussian elimination.
/// Each elimination step divides exactly by the previous pivot, so all
/// intermediate entries stay integral (they are minors of the input).
pub fn rank_int(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot_vals = m[rank].clone();
        let pivot = pivot_vals[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col].clone();
            for (cell, pv) in row.iter_mut().zip(&pivot_vals).skip(col + 1) {
                let num = &*cell * &pivot - &factor * pv;
                debug_assert!(num.is_multiple_of(&prev));
                *cell = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over the rationals by textbook elimination.  Slower, kept around as
/// an independent implementation for cross-checks.
pub fn rank_rational(mut m: Vec<Vec<BigRational>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot_row) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot_vals = m[rank].clone();
        let pivot = pivot_vals[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (cell, pv) in row.iter_mut().zip(&pivot_vals).skip(col) {
                *cell -= &factor * pv;
            }
        }
        rank += 1;
    }
    rank
}

/// Clears denominators row by row, preserving the row space.
pub fn rows_to_int(rows: &[Vec<BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, v| acc.lcm(&v.denom().abs()));
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn rat_matrix(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect()
    }

    #[test]
    fn known_ranks() {
        assert_eq!(rank_int(int_matrix(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_int(int_matrix(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank_int(int_matrix(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_int(int_matrix(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]])), 2);
        assert_eq!(rank_int(Vec::new()), 0);
    }

    proptest! {
        // Bareiss and rational elimination must agree on random matrices.
        #[test]
        fn bareiss_matches_rational(rows in proptest::collection::vec(
            proptest::collection::vec(-5i64..=5, 4), 1..6))
        {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            prop_assert_eq!(rank_int(int_matrix(&refs)), rank_rational(rat_matrix(&refs)));
        }
    }
}
