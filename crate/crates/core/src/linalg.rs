//! Exact linear algebra over a common cyclotomic field.

use alloc::vec::Vec;

use crate::cyclotomic::{CycloNum, Field, Raw};
use crate::rational::lcm;

/// A matrix lifted into the smallest cyclotomic field holding all entries.
pub(crate) fn lift_matrix(m: &[Vec<CycloNum>]) -> (Field, Vec<Vec<Raw>>) {
    let n = m
        .iter()
        .flatten()
        .fold(1, |acc, x| lcm(acc, x.conductor()));
    let field = Field::new(n);
    let rows = m
        .iter()
        .map(|row| row.iter().map(|x| field.lift(x)).collect())
        .collect();
    (field, rows)
}

/// Rank by Gaussian elimination with exact pivots.
pub fn rank(m: &[Vec<CycloNum>]) -> usize {
    let (field, rows) = lift_matrix(m);
    rank_in(&field, rows)
}

pub(crate) fn rank_in(field: &Field, mut rows: Vec<Vec<Raw>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !Field::is_zero(&rows[r][c])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][c]).expect("pivot is nonzero");
        let pivot: Vec<Raw> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for r in rank + 1..rows.len() {
            if Field::is_zero(&rows[r][c]) {
                continue;
            }
            let f = rows[r][c].clone();
            for k in c..cols {
                let t = field.mul(&f, &pivot[k]);
                rows[r][k] = field.sub(&rows[r][k], &t);
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn determinant_is_zero(m: &[Vec<CycloNum>]) -> bool {
    rank(m) < m.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::RootExp;

    fn c(n: i64) -> CycloNum {
        CycloNum::from_int(n)
    }

    #[test]
    fn rational_ranks() {
        assert_eq!(rank(&[vec![c(1), c(2)], vec![c(2), c(4)]]), 1);
        assert_eq!(rank(&[vec![c(1), c(2)], vec![c(3), c(4)]]), 2);
        assert_eq!(rank(&[vec![c(0), c(0)], vec![c(0), c(0)]]), 0);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn character_table_of_z3_is_invertible() {
        let w = |k: i64| CycloNum::root(RootExp::new(k, 3));
        let m: Vec<Vec<CycloNum>> = (0..3).map(|i| (0..3).map(|j| w(i * j)).collect()).collect();
        assert_eq!(rank(&m), 3);
        // the second row is ω times the first
        let s = vec![vec![c(1), w(1), w(2)], vec![w(1), w(2), c(1)], vec![c(1), c(1), c(1)]];
        assert_eq!(rank(&s), 2);
    }
}
