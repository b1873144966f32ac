//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Mersenne prime used for the modular pre-filter.
const PRIME: u64 = (1 << 61) - 1;

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// Pivots are the first nonzero entry at or below the current row in each
/// column, scanning columns left to right.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let height = m.len();
    let width = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(width, BigInt::zero());
    }
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..width {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

fn reduce(x: &BigInt) -> u64 {
    let r = (x % BigInt::from(PRIME)).to_i128().expect("residue fits in i128");
    if r < 0 {
        (r + PRIME as i128) as u64
    } else {
        r as u64
    }
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Rank of the matrix reduced modulo `2^61 - 1`. Never exceeds the rational rank.
pub fn modular_rank(rows: &[Vec<BigInt>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v: Vec<u64> = r.iter().map(reduce).collect();
            v.resize(width, 0);
            v
        })
        .collect();
    let height = m.len();
    let mut rank = 0;
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][col], PRIME - 2);
        let (top, bottom) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let factor = mul_mod(row[col], inv);
            for j in col..width {
                let sub = mul_mod(factor, pivot_row[j]);
                row[j] = (row[j] + PRIME - sub) % PRIME;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact rank: a full modular rank is conclusive, otherwise Bareiss decides.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let nonzero = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).count();
    if nonzero <= 1 {
        return nonzero;
    }
    if modular_rank(rows) == rows.len() {
        return rows.len();
    }
    bareiss_rank(rows)
}

/// Largest absolute entry, for diagnostics.
pub fn max_abs_entry(rows: &[Vec<BigInt>]) -> BigInt {
    rows.iter().flatten().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(bareiss_rank(&mat(&[])), 0);
        assert_eq!(bareiss_rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(&mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(bareiss_rank(&mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 1, 1]])), 2);
        assert_eq!(bareiss_rank(&mat(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), 3);
    }

    #[test]
    fn modular_and_exact_agree() {
        let cases = [
            mat(&[&[1, -1, 0, 2], &[3, 1, 1, 0], &[4, 0, 1, 2]]),
            mat(&[&[5, 7], &[-10, -14], &[0, 0]]),
            mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
        ];
        let expected = [2, 1, 3];
        for (m, e) in cases.iter().zip(expected) {
            assert_eq!(bareiss_rank(m), e);
            assert_eq!(modular_rank(m), e);
            assert_eq!(rank(m), e);
        }
    }

    #[test]
    fn entries_divisible_by_the_prime() {
        // modulo 2^61 - 1 this matrix has rank 1, over Q rank 2
        let p = BigInt::from(PRIME);
        let m = vec![vec![BigInt::one(), BigInt::zero()], vec![BigInt::zero(), p]];
        assert_eq!(modular_rank(&m), 1);
        assert_eq!(rank(&m), 2);
    }
}
