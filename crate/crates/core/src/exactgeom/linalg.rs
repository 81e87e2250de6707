//! Dense exact linear algebra over row-major matrices.


use super::scalar::Scalar;

pub type Matrix<S> = Vec<Vec<S>>;

/// Reduced row echelon form. Returns the nonzero rows (pivot entries equal to
/// one) and their pivot columns.
pub fn rref<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> (Matrix<S>, Vec<usize>) {
    let mut m: Matrix<S> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = S::one() / m[r][col].clone();
        for c in m[r].iter_mut() {
            *c = c.clone() * inv.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in 0..ncols {
                    let delta = f.clone() * m[r][c].clone();
                    m[i][c] = m[i][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : row . x = 0 for every row}`.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Matrix<S> {
    let (m, pivots) = rref(rows, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![S::zero(); ncols];
        v[free] = S::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn determinant<S: Scalar>(m: &[Vec<S>]) -> S {
    let n = m.len();
    let mut a: Matrix<S> = m.to_vec();
    let mut det = S::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return S::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det = det * a[col][col].clone();
        for i in col + 1..n {
            if !a[i][col].is_zero() {
                let f = a[i][col].clone() / a[col][col].clone();
                for c in col..n {
                    let delta = f.clone() * a[col][c].clone();
                    a[i][c] = a[i][c].clone() - delta;
                }
            }
        }
    }
    det
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<S: Scalar>(m: &[Vec<S>]) -> Option<Matrix<S>> {
    let n = m.len();
    let aug: Matrix<S> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec<S: Scalar>(m: &[Vec<S>], v: &[S]) -> Vec<S> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

pub fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Matrix<S> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(S::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn transpose<S: Scalar>(m: &[Vec<S>]) -> Matrix<S> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn identity<S: Scalar>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
        .collect()
}

/// Orthogonal projection of `v` onto the orthogonal complement of `span(basis)`.
pub fn project_out<S: Scalar>(v: &[S], basis: &[Vec<S>]) -> Vec<S> {
    if basis.is_empty() {
        return v.to_vec();
    }
    let k = basis.len();
    let dot = |a: &[S], b: &[S]| a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
    // Solve Gram * c = B v, then subtract B^T c.
    let mut aug: Matrix<S> = (0..k)
        .map(|i| {
            let mut row: Vec<S> = (0..k).map(|j| dot(&basis[i], &basis[j])).collect();
            row.push(dot(&basis[i], v));
            row
        })
        .collect();
    aug = rref(&aug, k + 1).0;
    let mut out = v.to_vec();
    for (i, row) in aug.iter().enumerate() {
        let c = row[k].clone();
        for (o, b) in out.iter_mut().zip(&basis[i]) {
            *o = o.clone() - c.clone() * b.clone();
        }
    }
    out
}
