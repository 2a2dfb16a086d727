use serde::Serialize;

use crate::{BudgetKind, Budgets, Error, Result};

/// A perfect matching as sorted pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: i64,
}

pub fn min_weight_perfect_matching(dist: &[Vec<i64>]) -> Result<Matching> {
    min_weight_perfect_matching_with(dist, &Budgets::default())
}

/// Exact minimum-weight perfect matching by dynamic programming over the set
/// of still-unmatched nodes: the lowest one is paired with each candidate in
/// turn. Ties go to the smallest partner, so the pairing is the
/// lexicographically smallest among the optimal ones.
pub fn min_weight_perfect_matching_with(dist: &[Vec<i64>], budgets: &Budgets) -> Result<Matching> {
    let t = dist.len();
    if dist.iter().any(|row| row.len() != t) {
        return Err(Error::InvalidArgument("distance matrix must be square".into()));
    }
    if t % 2 == 1 {
        return Err(Error::InvalidArgument(format!("odd node count {t} has no perfect matching")));
    }
    if t > budgets.matching_nodes || t >= usize::BITS as usize - 1 {
        return Err(Error::budget(
            BudgetKind::Matching,
            format!("{t} matching nodes exceeds {}", budgets.matching_nodes),
        ));
    }
    if t == 0 {
        return Ok(Matching { pairs: Vec::new(), weight: 0 });
    }

    let full = (1usize << t) - 1;
    let mut best = vec![i64::MAX; 1 << t];
    let mut partner = vec![u8::MAX; 1 << t];
    best[0] = 0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = best[rest & !(1 << j)];
            if sub == i64::MAX {
                continue;
            }
            let cost = sub.saturating_add(dist[i][j]);
            if cost < best[mask] {
                best[mask] = cost;
                partner[mask] = j as u8;
            }
        }
    }

    let mut pairs = Vec::with_capacity(t / 2);
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let j = partner[mask] as usize;
        pairs.push((i, j));
        mask &= !(1 << i) & !(1 << j);
    }
    Ok(Matching {
        pairs,
        weight: best[full],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute(dist: &[Vec<i64>], free: &mut Vec<usize>) -> i64 {
        if free.is_empty() {
            return 0;
        }
        let i = free.remove(0);
        let mut best = i64::MAX;
        for k in 0..free.len() {
            let j = free.remove(k);
            best = best.min(dist[i][j] + brute(dist, free));
            free.insert(k, j);
        }
        free.insert(0, i);
        best
    }

    #[test]
    fn small_examples() {
        let m = min_weight_perfect_matching(&[vec![0, 5], vec![5, 0]]).unwrap();
        assert_eq!(m.pairs, vec![(0, 1)]);
        assert_eq!(m.weight, 5);

        let d = vec![vec![0, 1, 9, 9], vec![1, 0, 9, 9], vec![9, 9, 0, 1], vec![9, 9, 1, 0]];
        let m = min_weight_perfect_matching(&d).unwrap();
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(m.weight, 2);

        assert!(min_weight_perfect_matching(&vec![vec![0; 3]; 3]).is_err());
        assert_eq!(min_weight_perfect_matching(&[]).unwrap().weight, 0);
    }

    #[test]
    fn ties_take_the_smallest_partner() {
        let m = min_weight_perfect_matching(&vec![vec![1; 4]; 4]).unwrap();
        assert_eq!(m.pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn budget() {
        let d = vec![vec![1; 24]; 24];
        assert!(matches!(
            min_weight_perfect_matching(&d),
            Err(Error::Budget { kind: BudgetKind::Matching, .. })
        ));
    }

    proptest! {
        #[test]
        fn matches_enumeration(half in 1usize..=4, raw in proptest::collection::vec(0i64..50, 64)) {
            let t = 2 * half;
            let mut d = vec![vec![0i64; t]; t];
            for i in 0..t {
                for j in i + 1..t {
                    d[i][j] = raw[i * 8 + j];
                    d[j][i] = d[i][j];
                }
            }
            let m = min_weight_perfect_matching(&d).unwrap();
            prop_assert_eq!(m.weight, brute(&d, &mut (0..t).collect()));
            let total: i64 = m.pairs.iter().map(|&(i, j)| d[i][j]).sum();
            prop_assert_eq!(total, m.weight);
        }
    }
}
