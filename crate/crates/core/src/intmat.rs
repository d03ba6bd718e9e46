//! Small exact integer linear algebra on `(ν+1)×(ν+1)` matrices.

use crate::error::{Error, Result};

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(matrix: &[Vec<i64>]) -> Result<i128> {
    let n = matrix.len();
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        return Ok(1);
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Solve `M x = b` over ℤ by Cramer's rule, where `columns[j]` is column `j`
/// of `M`. `None` when `M` is singular or the solution is not integral.
pub(crate) fn solve_integral(columns: &[Vec<i64>], rhs: &[i64]) -> Result<Option<Vec<i64>>> {
    let n = columns.len();
    let rows = |cols: &[Vec<i64>]| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect()
    };
    let det = determinant(&rows(columns))?;
    if det == 0 {
        return Ok(None);
    }
    let mut x = Vec::with_capacity(n);
    for j in 0..n {
        let mut replaced = columns.to_vec();
        replaced[j] = rhs.to_vec();
        let dj = determinant(&rows(&replaced))?;
        if dj % det != 0 {
            return Ok(None);
        }
        x.push(i64::try_from(dj / det).map_err(|_| Error::Overflow)?);
    }
    Ok(Some(x))
}
