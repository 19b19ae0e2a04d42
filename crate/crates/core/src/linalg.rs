//! Exact linear algebra over the field of rational functions.
//!
//! Rank and determinants run fraction-free (Bareiss) on denominator-cleared
//! polynomial matrices; the pivot sequence is the lexicographically first one,
//! so results are deterministic.

use crate::mpoly::MPoly;
use crate::ratfunc::RatFunc;
use crate::rat::Rat;

pub type Matrix = Vec<Vec<RatFunc>>;

/// Outcome of the rank computation: the generic rank together with a nonzero
/// minor of that order (rows/columns of the input matrix, ascending).
#[derive(Clone, Debug)]
pub struct RankResult {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
    /// Nonzero minor of maximal order; `None` for the zero matrix.
    pub certificate: Option<RatFunc>,
}

fn clear_row_denominators(row: &[RatFunc]) -> (Vec<MPoly>, MPoly) {
    let mut factor = MPoly::one();
    for e in row {
        if !e.den().is_one() {
            factor = factor.mul(e.den());
        }
    }
    let cleared = row
        .iter()
        .map(|e| {
            e.num()
                .mul(&factor.div_exact(e.den()).expect("denominator divides row factor"))
        })
        .collect();
    (cleared, factor)
}

/// Fraction-free elimination on a polynomial matrix. Returns the pivot
/// positions (row, col) in the order found, using the first nonzero entry
/// scanning columns left to right and rows top to bottom.
fn bareiss_pivots(mut m: Vec<Vec<MPoly>>) -> Vec<(usize, usize)> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    // row_of[i]: original index of the row currently in slot i
    let mut row_of: Vec<usize> = (0..rows).collect();
    let mut prev = MPoly::one();
    let mut k = 0;
    for c in 0..cols {
        if k >= rows {
            break;
        }
        // topmost nonzero entry in column c among slots k..
        let Some(r) = (k..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(k, r);
        row_of.swap(k, r);
        pivots.push((row_of[k], c));
        let pivot = m[k][c].clone();
        for i in k + 1..rows {
            for j in 0..cols {
                if j == c {
                    continue;
                }
                let t = pivot.mul(&m[i][j]).sub(&m[i][c].mul(&m[k][j]));
                m[i][j] = t
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            m[i][c] = MPoly::zero();
        }
        prev = pivot;
        k += 1;
    }
    pivots
}

/// Exact determinant of a square matrix of rational functions.
pub fn determinant(m: &Matrix) -> RatFunc {
    let n = m.len();
    if n == 0 {
        return RatFunc::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant of non-square matrix");
    let mut cleared = Vec::with_capacity(n);
    let mut factor = RatFunc::one();
    for row in m {
        let (cr, f) = clear_row_denominators(row);
        cleared.push(cr);
        factor = &factor * &RatFunc::from_poly(f);
    }
    let det_poly = bareiss_determinant(cleared);
    &RatFunc::from_poly(det_poly) / &factor
}

fn bareiss_determinant(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return MPoly::zero();
        };
        if r != k {
            m.swap(k, r);
            sign = !sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = pivot.mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MPoly::zero();
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Rank at a generic point, with a nonzero minor of maximal order as
/// certificate. The minor is taken on the pivot rows and columns, both in
/// ascending order.
pub fn generic_rank(m: &Matrix) -> RankResult {
    assert!(!m.is_empty(), "rank of empty matrix");
    let cleared: Vec<Vec<MPoly>> = m
        .iter()
        .map(|row| clear_row_denominators(row).0)
        .collect();
    let pivots = bareiss_pivots(cleared);
    let mut rows: Vec<usize> = pivots.iter().map(|(r, _)| *r).collect();
    let mut cols: Vec<usize> = pivots.iter().map(|(_, c)| *c).collect();
    rows.sort_unstable();
    cols.sort_unstable();
    let rank = pivots.len();
    let certificate = if rank == 0 {
        None
    } else {
        let sub: Matrix = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect())
            .collect();
        Some(determinant(&sub))
    };
    RankResult {
        rank,
        pivot_rows: rows,
        pivot_cols: cols,
        certificate,
    }
}

/// Result of solving `M x = b` over the rational-function field.
#[derive(Clone, Debug)]
pub enum LinearOutcome {
    /// One particular solution (free variables set to zero) and a basis of
    /// the null space.
    Solved {
        particular: Vec<RatFunc>,
        nullspace: Vec<Vec<RatFunc>>,
    },
    /// A left combination of the equations proving `0 = 1`:
    /// `witness * M = 0` while `witness * b != 0`.
    Inconsistent { witness: Vec<RatFunc> },
}

impl LinearOutcome {
    pub fn particular(&self) -> Option<&Vec<RatFunc>> {
        match self {
            LinearOutcome::Solved { particular, .. } => Some(particular),
            LinearOutcome::Inconsistent { .. } => None,
        }
    }

    pub fn is_consistent(&self) -> bool {
        matches!(self, LinearOutcome::Solved { .. })
    }
}

/// Gauss-Jordan over the rational-function field with an explicit
/// transformation matrix, so inconsistency comes with a proof row.
pub fn solve_linear(m: &Matrix, b: &[RatFunc]) -> LinearOutcome {
    let rows = m.len();
    assert_eq!(rows, b.len(), "dimension mismatch");
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Matrix = m.to_vec();
    let mut rhs: Vec<RatFunc> = b.to_vec();
    // transform[i]: row i of the accumulated left-multiplier
    let mut transform: Matrix = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() })
                .collect()
        })
        .collect();

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut k = 0;
    for c in 0..cols {
        if k >= rows {
            break;
        }
        let Some(r) = (k..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(k, r);
        rhs.swap(k, r);
        transform.swap(k, r);
        let pivot = a[k][c].clone();
        let inv = pivot.inv().expect("pivot nonzero");
        for j in 0..cols {
            a[k][j] = &a[k][j] * &inv;
        }
        rhs[k] = &rhs[k] * &inv;
        for j in 0..rows {
            transform[k][j] = &transform[k][j] * &inv;
        }
        for i in 0..rows {
            if i == k || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..cols {
                let t = &a[k][j] * &f;
                a[i][j] = &a[i][j] - &t;
            }
            let t = &rhs[k] * &f;
            rhs[i] = &rhs[i] - &t;
            for j in 0..rows {
                let t = &transform[k][j] * &f;
                transform[i][j] = &transform[i][j] - &t;
            }
        }
        pivot_cols.push(c);
        k += 1;
    }

    // inconsistent rows: zero coefficients, nonzero right-hand side
    for i in k..rows {
        if !rhs[i].is_zero() {
            return LinearOutcome::Inconsistent {
                witness: transform[i].clone(),
            };
        }
    }

    let mut particular = vec![RatFunc::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        particular[c] = rhs[i].clone();
    }
    let mut nullspace = Vec::new();
    for f in 0..cols {
        if pivot_cols.contains(&f) {
            continue;
        }
        let mut v = vec![RatFunc::zero(); cols];
        v[f] = RatFunc::one();
        for (i, &c) in pivot_cols.iter().enumerate() {
            v[c] = -&a[i][f];
        }
        nullspace.push(v);
    }
    LinearOutcome::Solved {
        particular,
        nullspace,
    }
}

/// Convenience: does `target` lie in the span of `vectors` over the
/// rational-function field? Returns the coefficients if so.
pub fn in_span(vectors: &[Vec<RatFunc>], target: &[RatFunc]) -> Option<Vec<RatFunc>> {
    if vectors.is_empty() {
        return if target.iter().all(|t| t.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let dim = target.len();
    let m: Matrix = (0..dim)
        .map(|i| vectors.iter().map(|v| v[i].clone()).collect())
        .collect();
    match solve_linear(&m, target) {
        LinearOutcome::Solved { particular, .. } => Some(particular),
        LinearOutcome::Inconsistent { .. } => None,
    }
}

/// Reduced row echelon form over Q, in place. Returns the pivot columns.
pub fn rref_rat(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    use num_traits::Zero;
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..cols {
        if k >= rows.len() {
            break;
        }
        let Some(r) = (k..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(k, r);
        let inv = Rat::from_integer(1.into()) / rows[k][c].clone();
        for j in 0..cols {
            rows[k][j] = &rows[k][j] * &inv;
        }
        for i in 0..rows.len() {
            if i == k || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in 0..cols {
                let t = &rows[k][j] * &f;
                rows[i][j] = &rows[i][j] - &t;
            }
        }
        pivots.push(c);
        k += 1;
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    pivots
}

/// Basis of the null space of a rational matrix, one vector per free column.
pub fn nullspace_rat(matrix: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    use num_traits::Zero;
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut rows = matrix.to_vec();
    let pivots = rref_rat(&mut rows);
    let mut basis = Vec::new();
    for f in 0..cols {
        if pivots.contains(&f) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::from_integer(1.into());
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = -rows[i][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `M x = b` over Q; `None` when inconsistent. Free variables are zero.
pub fn solve_rat(matrix: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    use num_traits::Zero;
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut rows: Vec<Vec<Rat>> = matrix
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let pivots = rref_rat(&mut rows);
    if pivots.contains(&cols) {
        return None; // pivot in the augmented column
    }
    let mut out = vec![Rat::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = rows[i][cols].clone();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_expr;

    fn e(s: &str) -> RatFunc {
        parse_expr(s).unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|s| e(s)).collect())
            .collect()
    }

    #[test]
    fn rank_with_certificate() {
        // [[y1_1, y2_1],[0, y2]] -> rank 2, certificate y2*y1_1
        let m = mat(&[&["y1_1", "y2_1"], &["0", "y2"]]);
        let r = generic_rank(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.certificate.unwrap(), e("y2*y1_1"));
    }

    #[test]
    fn rank_triangular_squared_pivot() {
        // [[y_x, 2y_xx],[0, y_x]] -> rank 2, certificate (y_x)^2
        let m = mat(&[&["y1_1", "2*y1_11"], &["0", "y1_1"]]);
        let r = generic_rank(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.certificate.unwrap(), e("y1_1^2"));
    }

    #[test]
    fn rank_zero_matrix() {
        let m = mat(&[&["0", "0"], &["0", "0"]]);
        let r = generic_rank(&m);
        assert_eq!(r.rank, 0);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn determinant_wronskian() {
        let m = mat(&[&["y1", "y2"], &["y1_1", "y2_1"]]);
        assert_eq!(determinant(&m), e("y1*y2_1 - y2*y1_1"));
    }

    #[test]
    fn solve_identity() {
        let m = mat(&[&["1", "0"], &["0", "1"]]);
        let b = vec![e("x1"), e("y1/x1")];
        match solve_linear(&m, &b) {
            LinearOutcome::Solved {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, b);
                assert!(nullspace.is_empty());
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn solve_wronskian_kernel_trivial() {
        // [[y1, y2],[y1_1, y2_1]] x = 0 has only the zero solution generically
        let m = mat(&[&["y1", "y2"], &["y1_1", "y2_1"]]);
        let b = vec![RatFunc::zero(), RatFunc::zero()];
        match solve_linear(&m, &b) {
            LinearOutcome::Solved {
                particular,
                nullspace,
            } => {
                assert!(particular.iter().all(|x| x.is_zero()));
                assert!(nullspace.is_empty());
            }
            _ => panic!("expected solution"),
        }
    }

    #[test]
    fn solve_inconsistent_with_witness() {
        let m = mat(&[&["1"], &["1"]]);
        let b = vec![e("0"), e("1")];
        match solve_linear(&m, &b) {
            LinearOutcome::Inconsistent { witness } => {
                // witness * M = 0 and witness * b != 0
                let wm = &(&witness[0] * &m[0][0]) + &(&witness[1] * &m[1][0]);
                assert!(wm.is_zero());
                let wb = &(&witness[0] * &b[0]) + &(&witness[1] * &b[1]);
                assert!(!wb.is_zero());
            }
            _ => panic!("expected inconsistency"),
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = mat(&[&["x1", "x1^2"]]);
        let b = vec![RatFunc::zero()];
        match solve_linear(&m, &b) {
            LinearOutcome::Solved { nullspace, .. } => {
                assert_eq!(nullspace.len(), 1);
                // x1 * v0 + x1^2 * v1 = 0
                let v = &nullspace[0];
                let chk = &(&e("x1") * &v[0]) + &(&e("x1^2") * &v[1]);
                assert!(chk.is_zero());
            }
            _ => panic!("expected solution"),
        }
    }
}
