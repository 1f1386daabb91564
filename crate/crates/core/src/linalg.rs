//! Exact linear algebra over ℚ.

use num_rational::BigRational;
use num_traits::Zero;

/// Rank of a rational matrix given by rows, by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let f = &rows[r][col] / &pivot_row[col];
            for (x, y) in rows[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x - &f * y;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
