//! Binary Krawtchouk polynomials in exact integer arithmetic.
//!
//! `K_k(j; m) = Σ_i (-1)^i C(j,i) C(m-j,k-i)` is the value of the elementary
//! symmetric polynomial `g_k(y)` on any `y ∈ {±1}^m` with `j` entries equal to
//! `-1`. With `y_ij = z_i z_j`, that is every assignment of cut value `j`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 1..=n {
        c = c * BigInt::from(n - k + 1) / BigInt::from(k);
        row.push(c.clone());
    }
    row
}

pub fn krawtchouk(k: usize, j: usize, m: usize) -> BigInt {
    assert!(k <= m && j <= m, "krawtchouk needs k, j <= m");
    let cj = binomial_row(j);
    let cmj = binomial_row(m - j);
    sum_terms(k, j, m, &cj, &cmj)
}

fn sum_terms(k: usize, j: usize, m: usize, cj: &[BigInt], cmj: &[BigInt]) -> BigInt {
    let lo = k.saturating_sub(m - j);
    let hi = k.min(j);
    let mut acc = BigInt::zero();
    for i in lo..=hi {
        let term = &cj[i] * &cmj[k - i];
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `table[k][j] = K_k(j; m)` for `k <= l`, `j <= m`.
pub fn krawtchouk_table(l: usize, m: usize) -> Vec<Vec<BigInt>> {
    assert!(l <= m, "degree exceeds m");
    let rows: Vec<Vec<BigInt>> = (0..=m).map(binomial_row).collect();
    (0..=l)
        .map(|k| (0..=m).map(|j| sum_terms(k, j, m, &rows[j], &rows[m - j])).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(k: usize, j: usize, m: usize) -> i64 {
        // y has its first j entries equal to -1
        let mut total = 0i64;
        for subset in 0u32..1 << m {
            if subset.count_ones() as usize == k {
                let negatives = (subset & ((1u32 << j) - 1)).count_ones();
                total += if negatives % 2 == 0 { 1 } else { -1 };
            }
        }
        total
    }

    #[test]
    fn low_degrees() {
        for m in 1..12 {
            for j in 0..=m {
                assert_eq!(krawtchouk(0, j, m), BigInt::one());
                assert_eq!(krawtchouk(1, j, m), BigInt::from(m as i64 - 2 * j as i64));
            }
        }
        assert_eq!(krawtchouk(2, 0, 6), BigInt::from(15));
    }

    #[test]
    fn matches_subset_enumeration() {
        for m in 1..=10 {
            let table = krawtchouk_table(m, m);
            for k in 0..=m {
                for j in 0..=m {
                    assert_eq!(table[k][j], BigInt::from(brute(k, j, m)), "k={k} j={j} m={m}");
                }
            }
        }
    }

    #[test]
    fn large_m_stays_exact() {
        // symmetry K_k(m-j) = (-1)^k K_k(j)
        let m = 120;
        let t = krawtchouk_table(60, m);
        for k in [1, 17, 60] {
            for j in [0, 3, 59] {
                let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                assert_eq!(t[k][m - j], sign * &t[k][j]);
            }
        }
    }
}
