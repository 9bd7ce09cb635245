//! Expected cycle-count bound for independent-pairs models with a
//! probability matrix.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::BlockModelSpec;

/// `trace(M^k)` upper-bounds the expected number of k-cycles, and is itself
/// at most `rank(M) * d_max^k` where `d_max` is the largest row sum.
#[derive(Debug, Clone, Serialize)]
pub struct CycleBound {
    pub k: u32,
    /// `trace(M^k)`, computed by repeated matrix multiplication.
    pub expected_cycles_upper: f64,
    pub rank: usize,
    pub max_row_sum: f64,
    /// `rank(M) * d_max^k`
    pub bound: f64,
}

/// Computes the trace and rank bound for `k`-cycles, `k >= 3`.
pub fn block_model_cycle_bound(spec: &BlockModelSpec, k: u32) -> Result<CycleBound> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle length must be at least 3, got {k}"
        )));
    }
    let m = spec.matrix();
    let mut power = m.clone();
    for _ in 1..k {
        power = &power * m;
    }
    let trace = power.trace();
    let max_entry = m.iter().fold(0.0f64, |acc, &x| acc.max(x.abs()));
    let rank = matrix_rank(m, 1e-9 * max_entry);
    let max_row_sum = spec.max_row_sum();
    Ok(CycleBound {
        k,
        expected_cycles_upper: trace,
        rank,
        max_row_sum,
        bound: rank as f64 * max_row_sum.powi(k as i32),
    })
}

/// Rank by Gaussian elimination with partial pivoting; pivots at or below
/// `tol` in magnitude count as zero.
fn matrix_rank(m: &DMatrix<f64>, tol: f64) -> usize {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let (pivot_row, pivot_abs) = (row..rows)
            .map(|r| (r, a[(r, col)].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("row range nonempty");
        if pivot_abs <= tol {
            continue;
        }
        a.swap_rows(row, pivot_row);
        let pivot = a[(row, col)];
        for r in (row + 1)..rows {
            let factor = a[(r, col)] / pivot;
            if factor != 0.0 {
                for c in col..cols {
                    a[(r, c)] -= factor * a[(row, c)];
                }
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_constant_matrix_is_tight() {
        // M = p * J: trace(M^k) = (n p)^k, rank 1, bound (n p)^k
        let n = 8;
        let p = 0.25;
        let spec = BlockModelSpec::new(DMatrix::from_element(n, n, p)).unwrap();
        let result = block_model_cycle_bound(&spec, 4).unwrap();
        let expect = (n as f64 * p).powi(4);
        assert!((result.expected_cycles_upper - expect).abs() < 1e-9);
        assert_eq!(result.rank, 1);
        assert!((result.bound - expect).abs() < 1e-9);
    }

    #[test]
    fn identity_is_tight() {
        let n = 12;
        let spec = BlockModelSpec::new(DMatrix::identity(n, n)).unwrap();
        let result = block_model_cycle_bound(&spec, 5).unwrap();
        assert!((result.expected_cycles_upper - n as f64).abs() < 1e-12);
        assert_eq!(result.rank, n);
        assert!((result.bound - n as f64).abs() < 1e-12);
    }

    #[test]
    fn small_k_rejected() {
        let spec = BlockModelSpec::new(DMatrix::identity(3, 3)).unwrap();
        assert!(block_model_cycle_bound(&spec, 2).is_err());
    }

    #[test]
    fn rank_detects_dependent_rows() {
        // rows 2 = row 0 + row 1
        let m = DMatrix::from_row_slice(3, 3, &[0.2, 0.1, 0.3, 0.1, 0.0, 0.1, 0.3, 0.1, 0.4]);
        let spec = BlockModelSpec::new(m).unwrap();
        let result = block_model_cycle_bound(&spec, 3).unwrap();
        assert_eq!(result.rank, 2);
    }

    #[test]
    fn trace_bound_holds_on_random_symmetric_instances() {
        use crate::rng::substream;
        use rand::Rng;
        for seed in 0..30u64 {
            let mut rng = substream(seed, 0);
            let n = 2 + (rng.random::<u32>() % 30) as usize;
            let mut m = DMatrix::zeros(n, n);
            for i in 0..n {
                for j in i..n {
                    let x: f64 = rng.random();
                    m[(i, j)] = x;
                    m[(j, i)] = x;
                }
            }
            let spec = BlockModelSpec::new(m).unwrap();
            let result = block_model_cycle_bound(&spec, 4).unwrap();
            assert!(
                result.expected_cycles_upper <= result.bound * (1.0 + 1e-12),
                "trace {} exceeded bound {} at seed {seed}",
                result.expected_cycles_upper,
                result.bound
            );
        }
    }
}
