//! Exact convex-combination feasibility by phase-one simplex.
//!
//! Entering columns follow the most negative reduced cost; after a run of
//! degenerate pivots the rule switches to Bland's, which cannot cycle.

use alloc::vec;
use alloc::vec::Vec;

use super::{ExactLinError, Rat};

const DEGENERATE_LIMIT: usize = 32;

/// Decides whether `p` lies in the convex hull of `points`, i.e. whether
/// there are `λ ≥ 0` with `Σλ = 1` and `Σ λ_i·points_i = p`.
pub fn lp_feasible_convex_combination(p: &[Rat], points: &[Vec<Rat>]) -> Result<bool, ExactLinError> {
    if points.is_empty() {
        return Err(ExactLinError::EmptyPointSet);
    }
    let d = p.len();
    if let Some(bad) = points.iter().find(|q| q.len() != d) {
        return Err(ExactLinError::DimensionMismatch { expected: d, found: bad.len() });
    }
    let m = points.len();
    let rows = d + 1;
    let ncol = m + rows;

    // constraint rows: coordinates, then Σλ = 1; artificials on the diagonal
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(rows + 1);
    for r in 0..rows {
        let mut row = vec![Rat::ZERO; ncol + 1];
        for (j, q) in points.iter().enumerate() {
            row[j] = if r < d { q[r].clone() } else { Rat::ONE };
        }
        row[ncol] = if r < d { p[r].clone() } else { Rat::ONE };
        if row[ncol].is_negative() {
            for x in row.iter_mut().take(m) {
                *x = -&*x;
            }
            row[ncol] = -&row[ncol];
        }
        row[m + r] = Rat::ONE;
        t.push(row);
    }
    let mut obj = vec![Rat::ZERO; ncol + 1];
    for row in &t {
        for j in 0..m {
            obj[j] -= &row[j];
        }
        obj[ncol] -= &row[ncol];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (m..m + rows).collect();
    let mut degenerate_run = 0usize;

    loop {
        let enter = if degenerate_run < DEGENERATE_LIMIT {
            (0..ncol).filter(|&j| t[rows][j].is_negative()).min_by(|&a, &b| t[rows][a].cmp(&t[rows][b]))
        } else {
            (0..ncol).find(|&j| t[rows][j].is_negative())
        };
        let Some(enter) = enter else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for r in 0..rows {
            if !t[r][enter].is_positive() {
                continue;
            }
            let ratio = &t[r][ncol] / &t[r][enter];
            let better = match (&best, leave) {
                (None, _) => true,
                (Some(b), Some(l)) => ratio < *b || (ratio == *b && basis[r] < basis[l]),
                (Some(_), None) => unreachable!(),
            };
            if better {
                best = Some(ratio);
                leave = Some(r);
            }
        }
        // phase one is bounded below by zero, so some row always qualifies
        let Some(pr) = leave else {
            break;
        };
        if best.as_ref().is_some_and(Rat::is_zero) {
            degenerate_run += 1;
        } else {
            degenerate_run = 0;
        }
        let piv = t[pr][enter].recip();
        for x in t[pr].iter_mut() {
            if !x.is_zero() {
                *x *= &piv;
            }
        }
        let pivot_row = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r == pr {
                continue;
            }
            let f = row[enter].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        basis[pr] = enter;
    }
    Ok(t[rows][ncol].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_int(x)).collect()
    }

    fn diamond() -> Vec<Vec<Rat>> {
        vec![pt(&[1, 0]), pt(&[-1, 0]), pt(&[0, 1]), pt(&[0, -1])]
    }

    #[test]
    fn vertex_and_midpoint_are_inside() {
        let pts = diamond();
        assert!(lp_feasible_convex_combination(&pts[0], &pts).unwrap());
        let mid = vec![Rat::half(), Rat::half()];
        assert!(lp_feasible_convex_combination(&mid, &pts).unwrap());
    }

    #[test]
    fn outside_point_is_rejected() {
        assert!(!lp_feasible_convex_combination(&pt(&[2, 0]), &diamond()).unwrap());
        assert!(!lp_feasible_convex_combination(&[Rat::new(3, 5), Rat::new(3, 5)], &diamond()).unwrap());
    }

    #[test]
    fn empty_and_ragged_inputs_error() {
        assert_eq!(lp_feasible_convex_combination(&pt(&[0]), &[]), Err(ExactLinError::EmptyPointSet));
        assert!(lp_feasible_convex_combination(&pt(&[0, 0]), &[pt(&[1])]).is_err());
    }
}
