//! Phase-1 simplex for the feasibility problem `{A x = b, x >= 0}`.
//!
//! Dense tableau, Bland's rule (lowest-index entering and leaving variables),
//! so the walk is deterministic and cannot cycle. Problems here are tiny
//! (tens of variables), so exactness of the outcome matters more than speed.
//! Infeasible systems yield a Farkas certificate `y` with `A^T y <= 0` and
//! `b^T y > 0`.

use alloc::vec;
use alloc::vec::Vec;

/// Pivot threshold: entries smaller than this are treated as zero.
pub const PIVOT_TOL: f64 = 1e-11;

pub enum LpOutcome {
    Feasible(Vec<f64>),
    /// Farkas certificate for the original (unflipped) rows.
    Infeasible(Vec<f64>),
}

pub fn phase1_feasible(a: &[Vec<f64>], b: &[f64]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    if m == 0 {
        return LpOutcome::Feasible(vec![0.0; n]);
    }

    // Flip rows with negative right-hand side so artificials start feasible.
    let mut flip = vec![1.0f64; m];
    // Tableau: columns 0..n original, n..n+m artificial, last column RHS.
    let width = n + m + 1;
    let mut t = vec![vec![0.0f64; width]; m + 1];
    for i in 0..m {
        if b[i] < 0.0 {
            flip[i] = -1.0;
        }
        for j in 0..n {
            t[i][j] = flip[i] * a[i][j];
        }
        t[i][n + i] = 1.0;
        t[i][width - 1] = flip[i] * b[i];
    }
    // Objective row: reduced costs for min(sum of artificials) with the
    // artificial basis priced out.
    for j in 0..width {
        let mut acc = 0.0;
        for row in t.iter().take(m) {
            acc += row[j];
        }
        t[m][j] = -acc;
    }
    for i in 0..m {
        t[m][n + i] = 0.0;
    }

    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        // Bland: entering variable is the lowest index with negative reduced cost.
        let mut entering = None;
        for j in 0..(n + m) {
            if t[m][j] < -PIVOT_TOL {
                entering = Some(j);
                break;
            }
        }
        let Some(e) = entering else { break };
        // Ratio test; ties resolved by the lowest basic-variable index.
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            if t[i][e] > PIVOT_TOL {
                let ratio = t[i][width - 1] / t[i][e];
                match leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < lr - PIVOT_TOL
                            || (ratio < lr + PIVOT_TOL && basis[i] < basis[li])
                        {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let Some((l, _)) = leave else {
            // Unbounded phase-1 objective cannot happen (it is bounded below
            // by zero); treat as stalled.
            break;
        };
        pivot(&mut t, l, e);
        basis[l] = e;
    }

    let objective = -t[m][width - 1];
    if objective > 1e-9 {
        // Dual certificate: y_i = 1 - reduced cost of the i-th artificial,
        // with the original row orientation restored.
        let y: Vec<f64> = (0..m).map(|i| flip[i] * (1.0 - t[m][n + i])).collect();
        return LpOutcome::Infeasible(y);
    }

    let mut x = vec![0.0f64; n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][width - 1];
        }
    }
    LpOutcome::Feasible(x)
}

fn pivot(t: &mut [Vec<f64>], row: usize, col: usize) {
    let width = t[0].len();
    let p = t[row][col];
    for j in 0..width {
        t[row][j] /= p;
    }
    let rows = t.len();
    for i in 0..rows {
        if i == row {
            continue;
        }
        let f = t[i][col];
        if f == 0.0 {
            continue;
        }
        for j in 0..width {
            t[i][j] -= f * t[row][j];
        }
        t[i][col] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feasible_simplex_point() {
        // x + y = 1, x, y >= 0.
        let a = vec![vec![1.0, 1.0]];
        let b = vec![1.0];
        match phase1_feasible(&a, &b) {
            LpOutcome::Feasible(x) => {
                assert!((x[0] + x[1] - 1.0).abs() < 1e-12);
                assert!(x.iter().all(|&v| v >= -1e-12));
            }
            LpOutcome::Infeasible(_) => panic!("should be feasible"),
        }
    }

    #[test]
    fn infeasible_system_with_certificate() {
        // x = 1 and x = 0 cannot hold together.
        let a = vec![vec![1.0], vec![1.0]];
        let b = vec![1.0, 0.0];
        match phase1_feasible(&a, &b) {
            LpOutcome::Feasible(_) => panic!("should be infeasible"),
            LpOutcome::Infeasible(y) => {
                // Farkas: A^T y <= 0, b^T y > 0.
                let aty = y[0] + y[1];
                let bty = y[0];
                assert!(aty <= 1e-9, "A^T y = {aty}");
                assert!(bty > 1e-9, "b^T y = {bty}");
            }
        }
    }

    #[test]
    fn negative_rhs_rows_are_handled() {
        // -x = -1 with x >= 0 is feasible at x = 1.
        let a = vec![vec![-1.0]];
        let b = vec![-1.0];
        match phase1_feasible(&a, &b) {
            LpOutcome::Feasible(x) => assert!((x[0] - 1.0).abs() < 1e-12),
            LpOutcome::Infeasible(_) => panic!("should be feasible"),
        }
    }
}
