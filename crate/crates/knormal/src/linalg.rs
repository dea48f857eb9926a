//! Dense linear algebra over a generic field context: just enough
//! Gauss-Jordan for rank computation and small matrix inversion.

use crate::error::{Error, Result};
use crate::fields::Field;

/// Row rank of a matrix given as a list of equal-length rows.
pub fn rank<F: Field>(f: &F, rows: &[Vec<F::Elem>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..m.len() {
            if i == r || f.is_zero(&m[i][c]) {
                continue;
            }
            let t = m[i][c].clone();
            for j in 0..ncols {
                let s = f.mul(&t, &m[r][j]);
                m[i][j] = f.sub(&m[i][j], &s);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Inverse and determinant of a square matrix; `SingularM` if not invertible.
pub fn invert<F: Field>(f: &F, mat: &[Vec<F::Elem>]) -> Result<(Vec<Vec<F::Elem>>, F::Elem)> {
    let n = mat.len();
    assert!(mat.iter().all(|row| row.len() == n), "matrix must be square");
    let mut m: Vec<Vec<F::Elem>> = mat.to_vec();
    let mut inv: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { f.one() } else { f.zero() })
                .collect()
        })
        .collect();
    let mut det = f.one();
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
            return Err(Error::SingularM);
        };
        if pivot != c {
            m.swap(c, pivot);
            inv.swap(c, pivot);
            det = f.neg(&det);
        }
        det = f.mul(&det, &m[c][c]);
        let piv_inv = f.inv(&m[c][c]).expect("pivot is nonzero");
        for j in 0..n {
            m[c][j] = f.mul(&m[c][j], &piv_inv);
            inv[c][j] = f.mul(&inv[c][j], &piv_inv);
        }
        for i in 0..n {
            if i == c || f.is_zero(&m[i][c]) {
                continue;
            }
            let t = m[i][c].clone();
            for j in 0..n {
                let s = f.mul(&t, &m[c][j]);
                m[i][j] = f.sub(&m[i][j], &s);
                let s = f.mul(&t, &inv[c][j]);
                inv[i][j] = f.sub(&inv[i][j], &s);
            }
        }
    }
    Ok((inv, det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::PrimeField;

    #[test]
    fn rank_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let rows = vec![vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 0]];
        assert_eq!(rank(&f2, &rows), 2);
        let rows = vec![vec![1, 0, 0], vec![0, 1, 1], vec![1, 1, 0]];
        assert_eq!(rank(&f2, &rows), 3);
        assert_eq!(rank(&f2, &[vec![0, 0], vec![0, 0]]), 0);
    }

    #[test]
    fn invert_small() {
        let f5 = PrimeField::new(5).unwrap();
        let m = vec![vec![1, 2], vec![3, 4]];
        let (inv, det) = invert(&f5, &m).unwrap();
        // det = 1*4 - 2*3 = -2 = 3 mod 5
        assert_eq!(det, 3);
        // m * inv == identity
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = 0;
                for k in 0..2 {
                    acc = f5.add(&acc, &f5.mul(&m[i][k], &inv[k][j]));
                }
                assert_eq!(acc, if i == j { 1 } else { 0 });
            }
        }
        let singular = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(invert(&f5, &singular), Err(Error::SingularM));
    }
}
